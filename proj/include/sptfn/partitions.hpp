#ifndef SPTFN_PARTITIONS_HPP
#define SPTFN_PARTITIONS_HPP

#include "sptfn/bigfloat.hpp"

namespace sptfn {

// Number of partitions of n, by the Euler pentagonal recurrence.  Memoized.
BigInt p_oracle(long n);

// spt(n) by enumerating the partitions of n and counting the multiplicity of
// each partition's smallest part.  Capped (default 60): use spt_oracle_series
// beyond the cap.
inline constexpr long kSptEnumCap = 60;
BigInt spt_oracle_enum(long n, long cap = kSptEnumCap);

// spt(n) from the generating function
//   S(q) = prod 1/(1-q^m) * ( sum m q^m/(1-q^m)
//                           + sum_{m!=0} (-1)^m q^{m(3m+1)/2}/(1-q^m)^2 ),
// expanded as an exact integer power series.  Memoized.
BigInt spt_oracle_series(long n);

// s(n) = spt(n) + (1/12)(24n-1) p(n); denominator divides 12.
Rational s_coeff(long n);

}  // namespace sptfn

#endif
