#include "sptfn/modfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace sptfn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.6931471805599453;
constexpr long kMaxOrder = 40000;

void require_upper_half(const BigComplex& tau, const char* who) {
    if (!tau.is_finite() || tau.im.sgn() <= 0)
        throw std::domain_error(std::string(who) + ": requires Im tau > 0");
}

long basic_order(double y, long prec) {
    return static_cast<long>((prec + 32) * kLn2 / (2.0 * kPi * y)) + 8;
}

// Order at which |a_m q^m| drops below 2^{-prec} for coefficients growing
// like e^{4 pi sqrt(m)} (weakly holomorphic pole of order one).
long whm_order(double y, long prec) {
    double K = (prec + 32) * kLn2 / (2.0 * kPi);
    double t = (1.0 + std::sqrt(1.0 + y * K)) / y;
    double m = t * t + 16.0;
    if (m > static_cast<double>(kMaxOrder))
        throw std::runtime_error("series order insufficient at Im tau = " +
                                 std::to_string(y) + ": required order " +
                                 std::to_string(static_cast<long>(m)) + " exceeds cap " +
                                 std::to_string(kMaxOrder));
    return static_cast<long>(m);
}

// Bits lost to cancellation against the largest intermediate term
// (~ e^{2 pi / y} for pole-order-one coefficient growth).
long cancel_bits(double y) {
    return static_cast<long>(2.0 * kPi / (y * kLn2)) + 1;
}

// prod_{m>=1} (1 - q^m) mod q^{N+1}, via the pentagonal number theorem.
QSeries euler_series(long N) {
    QSeries r;
    r.lead = 0;
    r.order = N;
    r.coeff.assign(N + 1, Rational(0));
    r.coeff[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 > N) break;
        int sign = (k % 2 == 1) ? -1 : 1;
        r.coeff[g1] += sign;
        if (g2 <= N) r.coeff[g2] += sign;
    }
    return r;
}

// 1 + scale * sum_m sigma_pow(m) q^m mod q^{N+1}
QSeries eisenstein_series(long N, int pow, long scale) {
    QSeries r;
    r.lead = 0;
    r.order = N;
    r.coeff.assign(N + 1, Rational(0));
    r.coeff[0] = 1;
    for (long m = 1; m <= N; ++m) {
        BigInt mp(m);
        BigInt mpow = mp;
        for (int i = 1; i < pow; ++i) mpow *= mp;
        for (long t = m; t <= N; t += m) r.coeff[t] += Rational(mpow * scale);
    }
    return r;
}

QSeries dilated(long d, long N, const std::function<QSeries(long)>& make) {
    long m = N / d + 1;
    return qs_truncate(qs_dilate(make(m), d), N);
}

QSeries level6_combo(long N, const std::function<QSeries(long)>& make, long c1, long c2,
                     long c3, long c6) {
    QSeries s = qs_scale(qs_truncate(make(N), N), Rational(c1));
    s = qs_add(s, qs_scale(dilated(2, N, make), Rational(c2)));
    s = qs_add(s, qs_scale(dilated(3, N, make), Rational(c3)));
    s = qs_add(s, qs_scale(dilated(6, N, make), Rational(c6)));
    return s;
}

struct SeriesBundle {
    long usable_order = -1;
    QSeries h;    // (E2 combo) / (eta quotient)^2, lead -1
    QSeries dh;   // q d/dq h
    QSeries f;    // (1/24)(E4 combo) / (eta quotient)^2, lead -1
};

std::shared_ptr<const SeriesBundle> build_bundle(long N) {
    auto eta_unit = [](long M) { return euler_series(M); };
    auto e2 = [](long M) { return eisenstein_series(M, 1, -24); };
    auto e4 = [](long M) { return eisenstein_series(M, 3, 240); };

    QSeries u = qs_truncate(euler_series(N), N);
    u = qs_mul(u, dilated(2, N, eta_unit));
    u = qs_mul(u, dilated(3, N, eta_unit));
    u = qs_mul(u, dilated(6, N, eta_unit));
    QSeries usq = qs_mul(u, u);
    // (eta(t)eta(2t)eta(3t)eta(6t))^2 = q * usq
    QSeries den = usq;
    den.lead += 1;
    den.order += 1;
    QSeries recip = qs_reciprocal(den);

    QSeries e2c = level6_combo(N, e2, 1, -2, -3, 6);
    QSeries e4c = level6_combo(N, e4, 1, -4, -9, 36);

    auto bundle = std::make_shared<SeriesBundle>();
    bundle->h = qs_mul(e2c, recip);
    bundle->dh = qs_qderiv(bundle->h);
    bundle->f = qs_scale(qs_mul(e4c, recip), Rational(1, 24));
    bundle->usable_order = bundle->h.order;
    return bundle;
}

class BundleCache {
  public:
    std::shared_ptr<const SeriesBundle> ensure(long order) {
        std::lock_guard<std::mutex> lock(mu_);
        if (!cur_ || cur_->usable_order < order) {
            long target = order + 1;
            if (cur_) target = std::max(target, cur_->usable_order + cur_->usable_order / 4);
            cur_ = build_bundle(target);
        }
        return cur_;
    }

  private:
    std::mutex mu_;
    std::shared_ptr<const SeriesBundle> cur_;
};

BundleCache g_bundles;

BigComplex q_from_tau(const BigComplex& tau, long wp) {
    BigReal two_pi = ldexp2(BigReal::pi(wp), 1);
    return exp(BigComplex(-(two_pi * tau.im.to_prec(wp)), two_pi * tau.re.to_prec(wp)));
}

struct WhmEval {
    BigComplex h;
    BigComplex dh;
    BigComplex f;
    long wp;
};

// Shared evaluation path for P and f: pick order with a certified tail below
// 2^{-prec-16} relative to the q^{-1} scale, growing the cached series until
// the actual trailing coefficients confirm it.
WhmEval eval_whm(const BigComplex& tau, long prec, bool need_h, bool need_f) {
    double y = tau.im.to_double();
    if (y <= 0.0)
        throw std::domain_error("P/f evaluation: requires Im tau > 0");
    long wp = prec + 48 + cancel_bits(y);
    double log2q = -2.0 * kPi * y / kLn2;
    double target = -(prec + 16) - log2q;
    long N = whm_order(y, prec + 16);
    std::shared_ptr<const SeriesBundle> b;
    for (;;) {
        if (N > kMaxOrder)
            throw std::runtime_error(
                "series order insufficient at Im tau = " + std::to_string(y) +
                "; required order " + std::to_string(N) + " exceeds cap " +
                std::to_string(kMaxOrder));
        b = g_bundles.ensure(N);
        double worst = -HUGE_VAL;
        if (need_h) {
            worst = std::max(worst, qs_tail_log2(b->h, log2q));
            worst = std::max(worst, qs_tail_log2(b->dh, log2q));
        }
        if (need_f) worst = std::max(worst, qs_tail_log2(b->f, log2q));
        if (worst <= target) break;
        N = std::max(b->usable_order + b->usable_order / 4, N + N / 4);
    }
    BigComplex q = q_from_tau(tau, wp);
    WhmEval out{BigComplex(wp), BigComplex(wp), BigComplex(wp), wp};
    if (need_h) {
        out.h = qs_eval(b->h, q, wp);
        out.dh = qs_eval(b->dh, q, wp);
    }
    if (need_f) out.f = qs_eval(b->f, q, wp);
    return out;
}

BigReal simpson_rule(const BigReal& a, const BigReal& fa, const BigReal& b,
                     const BigReal& fb, const BigReal& fm) {
    return (b - a) * (fa + BigReal::of(4, fa.prec()) * fm + fb) / 6;
}

BigReal adaptive_simpson(const std::function<BigReal(const BigReal&)>& fn, const BigReal& a,
                         const BigReal& b, const BigReal& fa, const BigReal& fb,
                         const BigReal& fm, const BigReal& whole, double tol, int depth) {
    BigReal m = ldexp2(a + b, -1);
    BigReal lm = ldexp2(a + m, -1);
    BigReal rm = ldexp2(m + b, -1);
    BigReal flm = fn(lm), frm = fn(rm);
    BigReal left = simpson_rule(a, fa, m, fm, flm);
    BigReal right = simpson_rule(m, fm, b, fb, frm);
    BigReal delta = left + right - whole;
    if (depth <= 0 || abs(delta).to_double() <= 15.0 * tol)
        return left + right + delta / 15;
    return adaptive_simpson(fn, a, m, fa, fm, flm, left, tol / 2, depth - 1) +
           adaptive_simpson(fn, m, b, fm, fb, frm, right, tol / 2, depth - 1);
}

BigReal integrate(const std::function<BigReal(const BigReal&)>& fn, const BigReal& a,
                  const BigReal& b, double tol) {
    BigReal m = ldexp2(a + b, -1);
    BigReal fa = fn(a), fb = fn(b), fm = fn(m);
    BigReal whole = simpson_rule(a, fa, b, fb, fm);
    return adaptive_simpson(fn, a, b, fa, fb, fm, whole, tol, 28);
}

}  // namespace

EvalContext make_context(const BigComplex& tau, long prec) {
    require_upper_half(tau, "make_context");
    double y = tau.im.to_double();
    if (y <= 0.0) throw std::domain_error("make_context: Im tau underflows to 0");
    return EvalContext{tau, prec, basic_order(y, prec)};
}

BigComplex eta_eval(const EvalContext& ctx) {
    require_upper_half(ctx.tau, "eta_eval");
    long wp = ctx.prec + 32;
    BigReal two_pi = ldexp2(BigReal::pi(wp), 1);
    // w = 2 pi i tau; every term is exp(g w) for integer (or 1/24) g
    BigReal wr = -(two_pi * ctx.tau.im.to_prec(wp));
    BigReal wi = two_pi * ctx.tau.re.to_prec(wp);
    auto qpow = [&](const Rational& g) {
        BigReal gr = BigReal::of(g, wp);
        return exp(BigComplex(gr * wr, gr * wi));
    };
    BigComplex sum(BigReal::of(1, wp), BigReal(wp));
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 > ctx.series_order) break;
        BigComplex term = qpow(Rational(g1));
        if (g2 <= ctx.series_order) term = term + qpow(Rational(g2));
        if (k % 2 == 1)
            sum = sum - term;
        else
            sum = sum + term;
    }
    BigComplex r = qpow(Rational(1, 24)) * sum;
    return BigComplex(r.re.to_prec(ctx.prec), r.im.to_prec(ctx.prec));
}

namespace {
BigComplex eisenstein_eval(const EvalContext& ctx, int pow, long scale) {
    require_upper_half(ctx.tau, "eisenstein_eval");
    long wp = ctx.prec + 32;
    long N = ctx.series_order + 64;
    QSeries s = eisenstein_series(N, pow, scale);
    BigComplex q = q_from_tau(ctx.tau, wp);
    BigComplex r = qs_eval(s, q, wp);
    return BigComplex(r.re.to_prec(ctx.prec), r.im.to_prec(ctx.prec));
}
}  // namespace

BigComplex e2_eval(const EvalContext& ctx) { return eisenstein_eval(ctx, 1, -24); }
BigComplex e4_eval(const EvalContext& ctx) { return eisenstein_eval(ctx, 3, 240); }

BigComplex P_eval(const BigComplex& tau, long prec) {
    require_upper_half(tau, "P_eval");
    WhmEval ev = eval_whm(tau, prec, true, false);
    long wp = ev.wp;
    BigReal two_pi_y = ldexp2(BigReal::pi(wp), 1) * tau.im.to_prec(wp);
    // y of the original tau: the 1/(2 pi y) completion is not invariant
    BigComplex p = ev.dh + ev.h / two_pi_y;
    p = BigComplex(ldexp2(-p.re, -1), ldexp2(-p.im, -1));
    return BigComplex(p.re.to_prec(prec), p.im.to_prec(prec));
}

BigComplex f_eval(const BigComplex& tau, long prec) {
    require_upper_half(tau, "f_eval");
    WhmEval ev = eval_whm(tau, prec, false, true);
    return BigComplex(ev.f.re.to_prec(prec), ev.f.im.to_prec(prec));
}

BigReal petersson_eta_norm(const BigReal& tol) {
    if (!(tol > 0.0)) throw std::domain_error("petersson_eta_norm: requires tol > 0");
    double td = tol.to_double();
    if (td <= 0.0) throw std::domain_error("petersson_eta_norm: tol underflows");
    if (td < 1e-22)
        throw std::runtime_error("petersson_eta_norm: tolerance unreachable at the fixed "
                                 "working precision");
    const long prec = 128;
    // truncation height: tail <= C (6/pi) e^{-pi Y/6} Y^{-3/2} < tol/2
    double C = 1.0087;
    double Y = 3.0;
    while (C * (6.0 / kPi) * std::exp(-kPi * Y / 6.0) / (Y * std::sqrt(Y)) >= td / 2.0)
        Y += 0.5;

    auto integrand = [&](const BigReal& x, const BigReal& y) {
        EvalContext ctx = make_context(BigComplex(x, y), prec);
        BigComplex e = eta_eval(ctx);
        BigReal n2 = e.re * e.re + e.im * e.im;
        return n2 / (y * sqrt(y));
    };
    auto inner = [&](const BigReal& x) {
        BigReal ylow = sqrt(BigReal::of(1, prec) - x * x);
        BigReal yhi = BigReal::of(Y, prec);
        return integrate([&](const BigReal& y) { return integrand(x, y); }, ylow, yhi,
                         td / 8.0);
    };
    // |eta(-x+iy)| = |eta(x+iy)|: integrate x in [0,1/2] and double
    BigReal half = ldexp2(BigReal::of(1, prec), -1);
    BigReal val = integrate(inner, BigReal(prec), half, td / 16.0);
    return ldexp2(val, 1);
}

}  // namespace sptfn
