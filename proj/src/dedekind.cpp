#include "sptfn/dedekind.hpp"

#include "sptfn/numkernel.hpp"

#include <stdexcept>

namespace sptfn {

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Rational dedekind_sum_naive(const BigInt& d, const BigInt& c) {
    if (c <= 0) throw std::domain_error("dedekind_sum_naive: requires c >= 1");
    BigInt dm;
    mpz_fdiv_r(dm.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
    // s(d,c) = (1/c^2) sum_{r<c} r*(dr mod c) - (c-1)/4
    BigInt s1 = 0, m = 0;
    for (BigInt r = 1; r < c; ++r) {
        m += dm;
        if (m >= c) m -= c;
        s1 += r * m;
    }
    Rational s(s1);
    s /= Rational(c * c);
    s -= Rational(c - 1, 4);
    s.canonicalize();
    return s;
}

Rational dedekind_sum(const BigInt& d, const BigInt& c) {
    if (c <= 0) throw std::domain_error("dedekind_sum: requires c >= 1");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
    if (g != 1) throw std::invalid_argument("dedekind_sum: requires gcd(d,c)=1");
    BigInt cc = c, r;
    mpz_fdiv_r(r.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
    Rational s(0);
    int sign = 1;
    // s(r,c) = -1/4 + (r^2+c^2+1)/(12rc) - s(c mod r, r), ending at s(*,1)=0
    while (cc > 1) {
        Rational term(r * r + cc * cc + 1);
        term /= Rational(12 * r * cc);
        term -= Rational(1, 4);
        term.canonicalize();
        if (sign > 0)
            s += term;
        else
            s -= term;
        BigInt nr;
        mpz_fdiv_r(nr.get_mpz_t(), cc.get_mpz_t(), r.get_mpz_t());
        cc = r;
        r = nr;
        sign = -sign;
    }
    s.canonicalize();
    return s;
}

Rational eta_multiplier_phase(const SL2Matrix& gamma) {
    if (gamma.c <= 0)
        throw std::domain_error("eta_multiplier: requires c > 0");
    // sqrt(-i) = e(-1/8), e^{-pi i s} = e(-s/2)
    Rational t(-1, 8);
    t += Rational(gamma.a + gamma.d, 24 * gamma.c);
    t -= dedekind_sum(gamma.d, gamma.c) / 2;
    t.canonicalize();
    // reduce to [0,1)
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    t -= Rational(fl);
    t.canonicalize();
    return t;
}

BigComplex eta_multiplier(const SL2Matrix& gamma, long prec) {
    return unit_exp(eta_multiplier_phase(gamma), prec);
}

}  // namespace sptfn
