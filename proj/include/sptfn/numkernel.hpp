#ifndef SPTFN_NUMKERNEL_HPP
#define SPTFN_NUMKERNEL_HPP

#include "sptfn/bigfloat.hpp"

namespace sptfn {

// I_{1/2}(x) = sqrt(2/(pi x)) * sinh(x), x > 0.
BigReal bessel_i_half(const BigReal& x, long prec);

// I_{3/2}(x) = sqrt(2/(pi x)) * (cosh(x) - sinh(x)/x), x > 0.  The inner
// difference cancels for small x and is summed by its Taylor series there.
BigReal bessel_i_threehalf(const BigReal& x, long prec);

// (I_{1/2} - I_{3/2})(x) = sqrt(2/(pi x)) * (sinh(x)/x - e^{-x}), x > 0.
BigReal bessel_i_diff(const BigReal& x, long prec);

// e(r) = e^{2 pi i r}; r is reduced mod 1 exactly before evaluation.
BigComplex unit_exp(const Rational& r, long prec);

}  // namespace sptfn

#endif
