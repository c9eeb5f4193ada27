#include "sptfn/series.hpp"

#include "sptfn/kloosterman.hpp"
#include "sptfn/numkernel.hpp"
#include "sptfn/partitions.hpp"
#include "sptfn/version.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace sptfn {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// pi sqrt(24n-1)/6
BigReal series_argument(long n, long wp) {
    return BigReal::pi(wp) * sqrt(BigReal::of(BigInt(24 * n - 1), wp)) / 6;
}

// Working precision covering the magnitude of the result (~ e^a) plus slack.
long working_prec(long n, long prec) {
    double a = 3.14159265358979 * std::sqrt(24.0 * n - 1.0) / 6.0;
    return std::max(prec, static_cast<long>(a / kLn2) + 64);
}

// Rigorous tail bound for the Rademacher series truncated after N terms:
//   2 pi (24n-1)^{-3/4} (a/2)^{3/2} e^{a/N} / Gamma(5/2) * sum_{c>N} d(c)/c^2
// with sum_{c>N} d(c)/c^2 <= (2 ln N + 4)/N, using |A_c| <= d(c) sqrt(c) and
// I_{3/2}(x) <= (x/2)^{3/2} e^x / Gamma(5/2) (valid for all x > 0).
// Evaluated with upward rounding throughout.
BigReal p_tail_bound(long n, long N, long wp) {
    BigReal b(wp);
    mpfr_t a, t, u;
    mpfr_init2(a, wp);
    mpfr_init2(t, wp);
    mpfr_init2(u, wp);
    // a >= pi sqrt(24n-1)/6
    mpfr_set_si(a, 24 * n - 1, MPFR_RNDU);
    mpfr_sqrt(a, a, MPFR_RNDU);
    mpfr_const_pi(u, MPFR_RNDU);
    mpfr_mul(a, a, u, MPFR_RNDU);
    mpfr_div_si(a, a, 6, MPFR_RNDU);
    // t = (a/2)^{3/2}
    mpfr_div_si(t, a, 2, MPFR_RNDU);
    mpfr_sqrt(u, t, MPFR_RNDU);
    mpfr_mul(t, t, u, MPFR_RNDU);
    // t *= e^{a/N}
    mpfr_div_si(u, a, N, MPFR_RNDU);
    mpfr_exp(u, u, MPFR_RNDU);
    mpfr_mul(t, t, u, MPFR_RNDU);
    // t *= 2 pi
    mpfr_const_pi(u, MPFR_RNDU);
    mpfr_mul(t, t, u, MPFR_RNDU);
    mpfr_mul_2si(t, t, 1, MPFR_RNDU);
    // t *= (2 ln N + 4)/N
    mpfr_set_si(u, N, MPFR_RNDU);
    mpfr_log(u, u, MPFR_RNDU);
    mpfr_mul_2si(u, u, 1, MPFR_RNDU);
    mpfr_add_si(u, u, 4, MPFR_RNDU);
    mpfr_div_si(u, u, N, MPFR_RNDU);
    mpfr_mul(t, t, u, MPFR_RNDU);
    // t *= (24n-1)^{-3/4}: exponent needs a lower bound before negation
    mpfr_set_si(u, 24 * n - 1, MPFR_RNDD);
    mpfr_log(u, u, MPFR_RNDD);
    mpfr_mul_si(u, u, 3, MPFR_RNDD);
    mpfr_div_si(u, u, 4, MPFR_RNDD);
    mpfr_neg(u, u, MPFR_RNDU);
    mpfr_exp(u, u, MPFR_RNDU);
    mpfr_mul(t, t, u, MPFR_RNDU);
    // t /= Gamma(5/2) = (3/4) sqrt(pi), divisor rounded down
    mpfr_const_pi(u, MPFR_RNDD);
    mpfr_sqrt(u, u, MPFR_RNDD);
    mpfr_mul_si(u, u, 3, MPFR_RNDD);
    mpfr_div_si(u, u, 4, MPFR_RNDD);
    mpfr_div(t, t, u, MPFR_RNDU);
    mpfr_set(b.raw(), t, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(t);
    mpfr_clear(u);
    return b;
}

// Terms for c in [1,N], evaluated in parallel chunks; the caller reduces
// strictly in ascending c order.
template <typename TermFn>
std::vector<BigReal> series_terms(long N, TermFn term) {
    std::vector<BigReal> terms(N);
    auto work = [&](long lo, long hi) {
        for (long c = lo; c <= hi; ++c) terms[c - 1] = term(c);
    };
    unsigned hw = std::thread::hardware_concurrency();
    long nthreads = std::min<long>(hw ? hw : 1, std::max<long>(1, N / 64));
    if (nthreads <= 1) {
        work(1, N);
    } else {
        std::vector<std::thread> pool;
        long chunk = (N + nthreads - 1) / nthreads;
        for (long t = 0; t < nthreads; ++t) {
            long lo = t * chunk + 1, hi = std::min(N, (t + 1) * chunk);
            if (lo > hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return terms;
}

void store_trace(SeriesReport& rep, std::vector<std::pair<long, BigReal>>&& rows) {
    rep.partial_sums = std::move(rows);
}

}  // namespace

SeriesReport p_rademacher(long n, long terms, long prec, bool keep_trace, long oracle_cap) {
    if (n < 1) throw std::domain_error("p_rademacher: requires n >= 1");
    long wp = working_prec(n, prec);
    long N = terms;
    BigReal bound(wp);
    if (N <= 0) {
        // grow N until the rigorous tail bound drops below 1/4
        double a = 3.14159265358979 * std::sqrt(24.0 * n - 1.0) / 6.0;
        N = std::max<long>(16, static_cast<long>(a));
        for (;;) {
            bound = p_tail_bound(n, N, wp);
            if (bound < 0.25) break;
            if (N > (1L << 26))
                throw std::runtime_error("p_rademacher: tail bound unachievable");
            N *= 2;
        }
    } else {
        bound = p_tail_bound(n, N, wp);
    }

    BigReal arg = series_argument(n, wp);
    auto term = [&](long c) {
        return a_selberg(n, c, wp) / c * bessel_i_threehalf(arg / c, wp);
    };
    std::vector<BigReal> term_list = series_terms(N, term);

    BigReal prefactor = ldexp2(BigReal::pi(wp), 1) *
                        exp(log(BigReal::of(BigInt(24 * n - 1), wp)) * -3 / 4);
    BigReal sum(wp);
    std::vector<std::pair<long, BigReal>> trace;
    long stride = keep_trace ? std::max<long>(1, N / 4096) : N + 1;
    for (long c = 1; c <= N; ++c) {
        sum = sum + term_list[c - 1];
        if (keep_trace && (c % stride == 0 || c == N))
            trace.emplace_back(c, prefactor * sum);
    }

    SeriesReport rep;
    rep.n = n;
    rep.method = "rademacher";
    rep.value = prefactor * sum;
    rep.rounded = rep.value.round_to_int();
    rep.residual = abs(rep.value - BigReal::of(rep.rounded, wp));
    rep.terms_used = N;
    rep.prec_bits = wp;
    rep.tail_bound = bound;
    if (keep_trace) store_trace(rep, std::move(trace));

    if (n <= oracle_cap && rep.rounded != p_oracle(n))
        throw std::runtime_error("p_rademacher: rounded value disagrees with the exact "
                                 "recurrence at n = " + std::to_string(n));
    return rep;
}

SeriesReport spt_series(long n, long terms, long prec, TailAverage smoothing,
                        bool keep_trace) {
    if (n < 1) throw std::domain_error("spt_series: requires n >= 1");
    if (terms < 1) throw std::domain_error("spt_series: requires N >= 1");
    long N = terms;
    long w = smoothing.window;
    if (w > N) w = N;
    long wp = working_prec(n, prec);

    BigReal arg = series_argument(n, wp);
    auto term = [&](long c) {
        return a_selberg(n, c, wp) / c * bessel_i_diff(arg / c, wp);
    };
    std::vector<BigReal> term_list = series_terms(N, term);

    BigReal prefactor = BigReal::pi(wp) / 6 *
                        exp(log(BigReal::of(BigInt(24 * n - 1), wp)) / 4);
    BigReal sum(wp);
    BigReal window_sum(wp);
    std::vector<BigReal> window_ring;
    if (w > 0) window_ring.assign(w, BigReal(wp));
    std::vector<std::pair<long, BigReal>> trace;
    long stride = keep_trace ? std::max<long>(1, N / 4096) : N + 1;
    for (long c = 1; c <= N; ++c) {
        sum = sum + term_list[c - 1];
        if (w > 0) {
            long slot = (c - 1) % w;
            if (c > w) window_sum = window_sum - window_ring[slot];
            window_ring[slot] = sum;
            window_sum = window_sum + sum;
        }
        if (keep_trace && (c % stride == 0 || c == N))
            trace.emplace_back(c, prefactor * sum);
    }

    SeriesReport rep;
    rep.n = n;
    rep.method = "spt_series";
    if (w > 0) {
        rep.value = prefactor * window_sum / w;
        rep.smoothing = "tail_average(" + std::to_string(w) + ")";
    } else {
        rep.value = prefactor * sum;
    }
    rep.rounded = rep.value.round_to_int();
    rep.residual = abs(rep.value - BigReal::of(rep.rounded, wp));
    rep.terms_used = N;
    rep.prec_bits = wp;
    if (keep_trace) store_trace(rep, std::move(trace));
    return rep;
}

std::vector<TraceRow> convergence_trace(const SeriesReport& report) {
    if (!report.partial_sums)
        throw std::logic_error("convergence_trace: report was built without partial sums");
    std::vector<TraceRow> rows;
    rows.reserve(report.partial_sums->size());
    for (const auto& [c, ps] : *report.partial_sums) {
        BigReal nearest = BigReal::of(ps.round_to_int(), ps.prec());
        rows.push_back({c, ps, abs(ps - nearest)});
    }
    return rows;
}

std::string SeriesReport::to_json() const {
    nlohmann::json j;
    j["version"] = kVersion;
    j["n"] = n;
    j["method"] = method;
    j["value"] = value.str();
    j["rounded"] = rounded.get_str();
    j["residual"] = residual.str();
    j["terms"] = terms_used;
    j["prec_bits"] = prec_bits;
    if (tail_bound) j["tail_bound"] = tail_bound->str();
    if (smoothing) j["smoothing"] = *smoothing;
    return j.dump();
}

}  // namespace sptfn
