#ifndef SPTFN_DEDEKIND_HPP
#define SPTFN_DEDEKIND_HPP

#include "sptfn/bigfloat.hpp"

namespace sptfn {

// Integer matrix (a b; c d) with det 1.
struct SL2Matrix {
    BigInt a, b, c, d;

    BigInt det() const { return a * d - b * c; }
    bool is_unimodular() const { return det() == 1; }
    SL2Matrix inverse() const { return {d, -b, -c, a}; }
    bool operator==(const SL2Matrix& o) const = default;
};

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y);

inline SL2Matrix sl2_identity() { return {1, 0, 0, 1}; }

// Dedekind sum s(d,c) = sum_{r=1}^{c-1} (r/c)(dr/c - floor(dr/c) - 1/2) by
// direct O(c) summation; d is reduced mod c first.
Rational dedekind_sum_naive(const BigInt& d, const BigInt& c);

// Same value via the reciprocity law in O(log c) steps; requires gcd(d,c)=1.
Rational dedekind_sum(const BigInt& d, const BigInt& c);

// Eta multiplier chi(gamma) = sqrt(-i) e((a+d)/(24c)) e^{-pi i s(d,c)} for
// gamma with c > 0.  The phase is assembled exactly as a rational before the
// single transcendental evaluation.
BigComplex eta_multiplier(const SL2Matrix& gamma, long prec);

// The exact phase t with chi(gamma) = e(t), t in [0,1).
Rational eta_multiplier_phase(const SL2Matrix& gamma);

}  // namespace sptfn

#endif
