#ifndef SPTFN_QSERIES_HPP
#define SPTFN_QSERIES_HPP

#include "sptfn/bigfloat.hpp"

#include <vector>

namespace sptfn {

// Truncated Laurent series in q with exact rational coefficients.
// coeff[i] multiplies q^{lead+i}; coefficients are valid for exponents
// lead .. order (the series is known modulo q^{order+1}).  An empty
// coefficient vector is the zero series.
struct QSeries {
    long lead = 0;
    long order = -1;
    std::vector<Rational> coeff;

    bool is_zero() const { return coeff.empty(); }
    const Rational& at(long exponent) const;  // 0 outside the stored window
    void normalize();                         // trim zero edges, keep order
};

QSeries qs_zero(long order);
QSeries qs_one(long order);

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_scale(const QSeries& a, const Rational& s);
QSeries qs_mul(const QSeries& a, const QSeries& b);
// 1/a for a with nonzero lowest coefficient.
QSeries qs_reciprocal(const QSeries& a);
// q -> q^d
QSeries qs_dilate(const QSeries& a, long d);
// q d/dq
QSeries qs_qderiv(const QSeries& a);
QSeries qs_truncate(const QSeries& a, long order);

// Horner evaluation at a complex point (|q| < 1 expected).
BigComplex qs_eval(const QSeries& a, const BigComplex& q, long prec);

// log2 of |largest residual tail term| of a at |q| = 2^{log2_absq}, estimated
// from the stored trailing coefficients plus a geometric-decay margin.
// +infinity (HUGE_VAL) when no decay margin can be certified.
double qs_tail_log2(const QSeries& a, double log2_absq);

}  // namespace sptfn

#endif
