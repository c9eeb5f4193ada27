#ifndef SPTFN_KLOOSTERMAN_HPP
#define SPTFN_KLOOSTERMAN_HPP

#include "sptfn/bigfloat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sptfn {

// A_c(n) = sum_{d mod c, (d,c)=1} e^{pi i s(d,c)} e(-dn/c), by definition.
// O(c log c); the oracle path.
BigReal a_direct(long n, long c, long prec);

// A_c(n) = sqrt(c/3) sum_{l mod 2c, (3l^2+l)/2 = -n (c)} (-1)^l cos((6l+1)pi/(6c)).
// O(c) with cheap terms; the production path.
BigReal a_selberg(long n, long c, long prec);

// Ordinary Kloosterman sum k(m,n;c) = sum_{d mod c, (d,c)=1} e((m dbar + n d)/c).
BigReal k_classical(long m, long n, long c, long prec);

// Generalized sum S(m,n,c,chi) for the eta multiplier on SL_2(Z)
// (q = 1, alpha = 23/24):
//   sum over (a b; c d), 0 <= a,d < c, ad = 1 (mod c), b = (ad-1)/c, of
//   conj(chi(gamma)) e(((m - 23/24) a + (n - 23/24) d)/c).
// Satisfies sqrt(i) A_c(n) = S(1, 1-n, c, chi).
BigComplex s_eta(long m, long n, long c, long prec);

// Lehmer's bound 2^{omega_o(c)} sqrt(c), omega_o = #distinct odd primes of c.
BigReal lehmer_bound(long c, long prec = 64);
int omega_odd(long c);

struct PentagonalWitness {
    long k = 0;
    enum class Branch { kMinus, kPlus } branch = Branch::kPlus;  // 3k-1 / 3k+1
    int sign = 1;  // (-1)^k
    long value = 0;
};

// Witness that m = k(3k+-1)/2 for some k >= 0, or nullopt.
std::optional<PentagonalWitness> pentagonal_index(long m);

struct SummatoryRow {
    long c;
    BigReal a_c;          // A_c(n)
    BigReal partial_sum;  // sum_{c' <= c} A_{c'}(n)/c'
};

struct SummatorySeries {
    long n = 0;
    long prec = 64;
    std::vector<SummatoryRow> rows;
    // (-1)^k 12 sqrt(3)/pi^2 when -n = k(3k+-1)/2 is pentagonal, else 0.
    BigReal main_term_coeff;

    // CSV with header c,A_c,partial_sum,main_term; main_term = coeff*sqrt(c).
    std::string to_csv() const;
};

// Rows for every c <= xmax using the Selberg evaluation.  parallel_blocks
// splits the c range for concurrent evaluation; the partial-sum reduction is
// always performed in ascending c order, so the output does not depend on
// the block count (0 = pick automatically).
SummatorySeries summatory(long n, long xmax, long prec, int parallel_blocks = 0);

}  // namespace sptfn

#endif
