#include "sptfn/numkernel.hpp"

#include <stdexcept>

namespace sptfn {

namespace {

constexpr long kGuard = 32;

void require_positive(const BigReal& x, const char* who) {
    if (!x.is_finite() || x.sgn() <= 0)
        throw std::domain_error(std::string(who) + ": requires x > 0");
}

BigReal sqrt_two_over_pix(const BigReal& x, long wp) {
    BigReal pi = BigReal::pi(wp);
    return sqrt(BigReal::of(2, wp) / (pi * x.to_prec(wp)));
}

// cosh(x) - sinh(x)/x = sum_{k>=1} 2k/(2k+1)! x^{2k}, for small x.
BigReal cosh_minus_sinhx_taylor(const BigReal& x, long wp) {
    BigReal x2 = x.to_prec(wp) * x.to_prec(wp);
    BigReal term = x2 / 3;  // k=1: 2/3! = 1/3
    BigReal sum = term;
    long k = 1;
    long stop = -(wp + 8);
    while (!term.is_zero() && term.exponent2() - sum.exponent2() > stop) {
        // t_{k+1} = t_k * x^2 * (k+1)/(k (2k+2)(2k+3))
        term = term * x2 * (k + 1) / (k * (2 * k + 2) * (2 * k + 3));
        sum = sum + term;
        ++k;
    }
    return sum;
}

// sinh(x)/x - e^{-x} = sum_{m odd} x^m/m! - sum_{m>=2 even} m x^m/(m+1)!,
// for small x.
BigReal diff_inner_taylor(const BigReal& x, long wp) {
    BigReal xs = x.to_prec(wp);
    BigReal xpow = xs;       // x^m
    BigReal fact(wp);        // m!
    mpfr_set_si(fact.raw(), 1, MPFR_RNDN);
    BigReal sum = xs;        // m = 1 term: x/1!
    long stop = -(wp + 8);
    for (long m = 2;; ++m) {
        xpow = xpow * xs;
        fact = fact * m;
        BigReal term(wp);
        if (m % 2 == 1) {
            term = xpow / fact;
            sum = sum + term;
        } else {
            term = xpow * m / (fact * (m + 1));
            sum = sum - term;
        }
        if (term.is_zero() || term.exponent2() - sum.exponent2() <= stop) break;
    }
    return sum;
}

}  // namespace

BigReal bessel_i_half(const BigReal& x, long prec) {
    require_positive(x, "bessel_i_half");
    long wp = prec + kGuard;
    BigReal r = sqrt_two_over_pix(x, wp) * sinh(x.to_prec(wp));
    return r.to_prec(prec);
}

BigReal bessel_i_threehalf(const BigReal& x, long prec) {
    require_positive(x, "bessel_i_threehalf");
    long wp = prec + kGuard;
    BigReal xs = x.to_prec(wp);
    BigReal inner(wp);
    if (x < 1.0) {
        inner = cosh_minus_sinhx_taylor(xs, wp);
    } else {
        inner = cosh(xs) - sinh(xs) / xs;
    }
    BigReal r = sqrt_two_over_pix(x, wp) * inner;
    return r.to_prec(prec);
}

BigReal bessel_i_diff(const BigReal& x, long prec) {
    require_positive(x, "bessel_i_diff");
    long wp = prec + kGuard;
    BigReal xs = x.to_prec(wp);
    BigReal inner(wp);
    if (x < 0.5) {
        inner = diff_inner_taylor(xs, wp);
    } else {
        inner = sinh(xs) / xs - exp(-xs);
    }
    BigReal r = sqrt_two_over_pix(x, wp) * inner;
    return r.to_prec(prec);
}

BigComplex unit_exp(const Rational& r, long prec) {
    long wp = prec + 16;
    // reduce r mod 1 exactly
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    Rational frac = r - Rational(q);
    BigReal theta(wp);
    mpfr_const_pi(theta.raw(), MPFR_RNDN);
    mpfr_mul_2si(theta.raw(), theta.raw(), 1, MPFR_RNDN);
    mpfr_mul_q(theta.raw(), theta.raw(), frac.get_mpq_t(), MPFR_RNDN);
    BigReal c(wp), s(wp);
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    return BigComplex(c.to_prec(prec), s.to_prec(prec));
}

}  // namespace sptfn
