#ifndef SPTFN_CMTRACE_HPP
#define SPTFN_CMTRACE_HPP

#include "sptfn/bigfloat.hpp"
#include "sptfn/qforms.hpp"

#include <string>
#include <vector>

namespace sptfn {

struct TraceResult {
    long n = 0;
    std::string method;
    BigComplex trace_value;  // sum over class representatives
    BigInt rounded;          // integer-valued traces
    Rational rounded_rational;  // s-trace: nearest element of (1/12)Z
    bool rational_valued = false;
    BigReal residual;
    long prec_bits = 0;
    long class_count = 0;

    std::string to_json() const;
};

// spt(n) = (1/12) sum_Q (f - P)(tau_Q); verified against the exact oracle
// for n <= oracle_cap.  Escalates precision (x2, up to 4096 bits) while the
// residual is >= 1e-6, then fails hard.
TraceResult spt_trace(long n, long prec, long oracle_cap = 1000);

// s(n) = (1/12) sum_Q f(tau_Q), rounded to the nearest element of (1/12)Z.
TraceResult s_trace(long n, long prec);

// p(n) = (1/(24n-1)) sum_Q P(tau_Q).
TraceResult p_trace(long n, long prec);

struct ClassPolynomial {
    long n = 0;
    long degree = 0;
    long prec_bits = 0;
    bool reconstructed = false;
    BigInt denominator_bound;
    std::vector<Rational> coefficients;   // ascending, empty unless reconstructed
    std::vector<BigReal> float_coefficients;  // ascending, always present

    std::string display() const;  // e.g. "x^3 - 12x^2 - 1008/23 x - 1728/23"
    std::string to_json() const;
};

// prod_Q (x - g(tau_Q)) with g = f - P; float coefficients reconstructed to
// rationals by continued-fraction best approximation with denominators up to
// the bound (default 24n-1, escalated once to (24n-1)^2).
ClassPolynomial class_polynomial(long n, long prec, const BigInt& denominator_bound = 0);

// Continued-fraction convergent of x with denominator <= bound.
Rational rational_reconstruct(const BigReal& x, const BigInt& bound);

}  // namespace sptfn

#endif
