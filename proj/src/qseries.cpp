#include "sptfn/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sptfn {

namespace {
const Rational kZero(0);

double log2_abs(const Rational& r) {
    if (r == 0) return -HUGE_VAL;
    double num_bits = static_cast<double>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2));
    double den_bits = static_cast<double>(mpz_sizeinbase(r.get_den().get_mpz_t(), 2));
    return num_bits - den_bits + 1.0;
}

bool integral(const QSeries& a) {
    for (const auto& c : a.coeff)
        if (c.get_den() != 1) return false;
    return true;
}
}  // namespace

const Rational& QSeries::at(long exponent) const {
    long i = exponent - lead;
    if (i < 0 || i >= static_cast<long>(coeff.size())) return kZero;
    return coeff[i];
}

void QSeries::normalize() {
    size_t lo = 0;
    while (lo < coeff.size() && coeff[lo] == 0) ++lo;
    if (lo == coeff.size()) {
        coeff.clear();
        lead = 0;
        return;
    }
    size_t hi = coeff.size();
    while (hi > lo && coeff[hi - 1] == 0) --hi;
    if (lo > 0 || hi < coeff.size()) {
        std::vector<Rational> trimmed(coeff.begin() + lo, coeff.begin() + hi);
        coeff = std::move(trimmed);
        lead += static_cast<long>(lo);
    }
}

QSeries qs_zero(long order) { return QSeries{0, order, {}}; }

QSeries qs_one(long order) { return QSeries{0, order, {Rational(1)}}; }

QSeries qs_add(const QSeries& a, const QSeries& b) {
    if (a.is_zero()) return QSeries{b.lead, std::min(a.order, b.order), b.coeff};
    if (b.is_zero()) return QSeries{a.lead, std::min(a.order, b.order), a.coeff};
    QSeries r;
    r.order = std::min(a.order, b.order);
    r.lead = std::min(a.lead, b.lead);
    long hi = std::min(r.order,
                       std::max(a.lead + static_cast<long>(a.coeff.size()) - 1,
                                b.lead + static_cast<long>(b.coeff.size()) - 1));
    if (hi < r.lead) return qs_zero(r.order);
    r.coeff.assign(hi - r.lead + 1, Rational(0));
    for (long e = r.lead; e <= hi; ++e) r.coeff[e - r.lead] = a.at(e) + b.at(e);
    r.normalize();
    return r;
}

QSeries qs_sub(const QSeries& a, const QSeries& b) {
    return qs_add(a, qs_scale(b, Rational(-1)));
}

QSeries qs_scale(const QSeries& a, const Rational& s) {
    if (s == 0) return qs_zero(a.order);
    QSeries r = a;
    for (auto& c : r.coeff) c *= s;
    return r;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
    if (a.is_zero() || b.is_zero())
        return qs_zero(std::min(a.order + b.lead, b.order + a.lead));
    QSeries r;
    r.lead = a.lead + b.lead;
    r.order = std::min(a.order + b.lead, b.order + a.lead);
    if (r.order < r.lead) return qs_zero(r.order);
    long rn = r.order - r.lead + 1;
    long an = static_cast<long>(a.coeff.size());
    long bn = static_cast<long>(b.coeff.size());
    if (integral(a) && integral(b)) {
        // mpz accumulation; mpq canonicalization would dominate otherwise
        std::vector<BigInt> acc(rn, BigInt(0));
        for (long i = 0; i < an; ++i) {
            const BigInt& ai = a.coeff[i].get_num();
            if (ai == 0) continue;
            long jmax = std::min(bn - 1, rn - 1 - i);
            for (long j = 0; j <= jmax; ++j) {
                const BigInt& bj = b.coeff[j].get_num();
                if (bj == 0) continue;
                mpz_addmul(acc[i + j].get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
            }
        }
        r.coeff.assign(rn, Rational(0));
        for (long i = 0; i < rn; ++i) r.coeff[i] = Rational(acc[i]);
    } else {
        r.coeff.assign(rn, Rational(0));
        for (long i = 0; i < an; ++i) {
            if (a.coeff[i] == 0) continue;
            long jmax = std::min(bn - 1, rn - 1 - i);
            for (long j = 0; j <= jmax; ++j) {
                if (b.coeff[j] == 0) continue;
                r.coeff[i + j] += a.coeff[i] * b.coeff[j];
            }
        }
    }
    r.normalize();
    return r;
}

QSeries qs_reciprocal(const QSeries& a) {
    if (a.is_zero() || a.coeff[0] == 0)
        throw std::invalid_argument("qs_reciprocal: lowest coefficient must be nonzero");
    long n = a.order - a.lead;  // unit part known through q^n
    if (n < 0) throw std::invalid_argument("qs_reciprocal: empty working window");
    QSeries r;
    r.lead = -a.lead;
    r.order = r.lead + n;
    r.coeff.assign(n + 1, Rational(0));
    long klim = static_cast<long>(a.coeff.size()) - 1;
    if (integral(a) && (a.coeff[0] == 1 || a.coeff[0] == -1)) {
        long s0 = (a.coeff[0] == 1) ? 1 : -1;
        std::vector<BigInt> out(n + 1, BigInt(0));
        out[0] = s0;
        BigInt acc;
        for (long m = 1; m <= n; ++m) {
            acc = 0;
            long kmax = std::min<long>(m, klim);
            for (long k = 1; k <= kmax; ++k) {
                const BigInt& ak = a.coeff[k].get_num();
                if (ak == 0) continue;
                mpz_addmul(acc.get_mpz_t(), ak.get_mpz_t(), out[m - k].get_mpz_t());
            }
            out[m] = (s0 == 1) ? BigInt(-acc) : acc;
        }
        for (long m = 0; m <= n; ++m) r.coeff[m] = Rational(out[m]);
        return r;
    }
    Rational inv0 = 1 / a.coeff[0];
    r.coeff[0] = inv0;
    for (long m = 1; m <= n; ++m) {
        Rational acc(0);
        long kmax = std::min<long>(m, klim);
        for (long k = 1; k <= kmax; ++k) {
            if (a.coeff[k] == 0) continue;
            acc += a.coeff[k] * r.coeff[m - k];
        }
        r.coeff[m] = -inv0 * acc;
    }
    return r;
}

QSeries qs_dilate(const QSeries& a, long d) {
    if (d < 1) throw std::invalid_argument("qs_dilate: requires d >= 1");
    QSeries r;
    r.lead = a.lead * d;
    r.order = (a.order + 1) * d - 1;
    if (a.is_zero()) return QSeries{0, r.order, {}};
    r.coeff.assign((a.coeff.size() - 1) * d + 1, Rational(0));
    for (size_t i = 0; i < a.coeff.size(); ++i) r.coeff[i * d] = a.coeff[i];
    return r;
}

QSeries qs_qderiv(const QSeries& a) {
    QSeries r = a;
    for (size_t i = 0; i < r.coeff.size(); ++i)
        r.coeff[i] *= Rational(r.lead + static_cast<long>(i));
    r.normalize();
    return r;
}

QSeries qs_truncate(const QSeries& a, long order) {
    QSeries r = a;
    r.order = std::min(a.order, order);
    long keep = r.order - r.lead + 1;
    if (keep < 0) keep = 0;
    if (static_cast<long>(r.coeff.size()) > keep) r.coeff.resize(keep);
    r.normalize();
    return r;
}

BigComplex qs_eval(const QSeries& a, const BigComplex& q, long prec) {
    if (a.is_zero()) return BigComplex(prec);
    BigComplex acc(BigReal::of(a.coeff.back(), prec), BigReal(prec));
    for (long i = static_cast<long>(a.coeff.size()) - 2; i >= 0; --i) {
        acc = acc * q;
        if (a.coeff[i] != 0) acc = acc + BigReal::of(a.coeff[i], prec);
    }
    // multiply by q^{lead}
    long e = a.lead;
    if (e != 0) {
        BigComplex base = q;
        bool invert = e < 0;
        unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        BigComplex p(BigReal::of(1, prec), BigReal(prec));
        while (k) {
            if (k & 1) p = p * base;
            base = base * base;
            k >>= 1;
        }
        if (invert)
            acc = acc / p;
        else
            acc = acc * p;
    }
    return acc;
}

double qs_tail_log2(const QSeries& a, double log2_absq) {
    if (a.is_zero()) return -HUGE_VAL;
    long n = static_cast<long>(a.coeff.size());
    long window = std::min<long>(n, 8);
    double worst = -HUGE_VAL;
    for (long i = n - window; i < n; ++i) {
        if (a.coeff[i] == 0) continue;
        double t = log2_abs(a.coeff[i]) + (a.lead + i) * log2_absq;
        worst = std::max(worst, t);
    }
    if (worst == -HUGE_VAL) worst = 0.0 + a.order * log2_absq;
    // decay margin: successive terms of the series family used here shrink by
    // at least 2^{ratio} with ratio = 2*pi/(sqrt(N) ln 2) + log2|q|
    double N = static_cast<double>(std::max<long>(a.order, 1));
    double ratio = 2.0 * 3.14159265358979323846 / (std::sqrt(N) * 0.6931471805599453) +
                   log2_absq;
    if (ratio >= -0.5) return HUGE_VAL;  // cannot certify geometric decay
    double margin = std::log2(1.0 / (1.0 - std::pow(2.0, ratio)));
    return worst + margin;
}

}  // namespace sptfn
