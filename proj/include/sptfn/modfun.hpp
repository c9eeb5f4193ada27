#ifndef SPTFN_MODFUN_HPP
#define SPTFN_MODFUN_HPP

#include "sptfn/bigfloat.hpp"
#include "sptfn/qseries.hpp"

namespace sptfn {

struct EvalContext {
    BigComplex tau;
    long prec = 64;
    long series_order = 0;
};

// Validates Im tau > 0 and picks a series order with |q|^order < 2^{-prec-16}.
EvalContext make_context(const BigComplex& tau, long prec);

// Dedekind eta via the pentagonal-number expansion
// q^{1/24} sum_k (-1)^k q^{k(3k-1)/2}.
BigComplex eta_eval(const EvalContext& ctx);

// E_2 = 1 - 24 sum sigma_1(m) q^m
BigComplex e2_eval(const EvalContext& ctx);
// E_4 = 1 + 240 sum sigma_3(m) q^m
BigComplex e4_eval(const EvalContext& ctx);

// P = -(1/2)(q d/dq + 1/(2 pi y)) [ (E2 - 2E2(2t) - 3E2(3t) + 6E2(6t))
//                                   / (eta eta(2t) eta(3t) eta(6t))^2 ]
BigComplex P_eval(const BigComplex& tau, long prec);

// f = (1/24) (E4 - 4E4(2t) - 9E4(3t) + 36E4(6t))
//          / (eta eta(2t) eta(3t) eta(6t))^2
BigComplex f_eval(const BigComplex& tau, long prec);

// Petersson norm  int_F y^{1/2} |eta|^2 dx dy / y^2  over the standard
// fundamental domain, by adaptive quadrature with an analytic tail bound.
BigReal petersson_eta_norm(const BigReal& tol);

}  // namespace sptfn

#endif
