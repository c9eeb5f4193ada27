#include "sptfn/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace sptfn {

namespace {

std::mutex p_mutex;
std::vector<BigInt> p_table;  // p_table[n] = p(n)

std::mutex spt_mutex;
std::vector<BigInt> spt_table;  // spt_table[n] = spt(n), index 0 unused

// Extends the memo table under p_mutex.
void extend_p_table(long n) {
    if (p_table.empty()) p_table.emplace_back(1);
    for (long m = static_cast<long>(p_table.size()); m <= n; ++m) {
        BigInt acc = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            BigInt sub = p_table[m - g1];
            if (g2 <= m) sub += p_table[m - g2];
            if (k % 2 == 1)
                acc += sub;
            else
                acc -= sub;
        }
        p_table.push_back(acc);
    }
}

// Andrews series coefficients of S(q) through order n, exact integers.
std::vector<BigInt> expand_spt_series(long n) {
    long N = n;
    // sum m q^m/(1-q^m): coefficient of q^j is sigma_1(j)
    std::vector<BigInt> inner(N + 1, BigInt(0));
    for (long m = 1; m <= N; ++m)
        for (long t = m; t <= N; t += m) inner[t] += m;
    // sum_{m!=0} (-1)^m q^{m(3m+1)/2}/(1-q^m)^2; the m<0 half folds onto
    // positive exponents as (-1)^j q^{3j(j+1)/2}/(1-q^j)^2 with j=-m.
    for (long j = 1;; ++j) {
        long g1 = j * (3 * j + 1) / 2;
        long g2 = 3 * j * (j + 1) / 2;
        if (g1 > N && g2 > N) break;
        int sign = (j % 2 == 1) ? -1 : 1;
        for (long g : {g1, g2}) {
            if (g > N) continue;
            // q^g/(1-q^j)^2 = sum_{i>=0} (i+1) q^{g+ij}
            for (long i = 0; g + i * j <= N; ++i) {
                if (sign > 0)
                    inner[g + i * j] += i + 1;
                else
                    inner[g + i * j] -= i + 1;
            }
        }
    }
    // multiply by prod 1/(1-q^m) = sum p(k) q^k
    std::vector<BigInt> pref(N + 1);
    for (long k = 0; k <= N; ++k) pref[k] = p_oracle(k);
    std::vector<BigInt> out(N + 1, BigInt(0));
    for (long i = 0; i <= N; ++i) {
        if (inner[i] == 0) continue;
        for (long k = 0; i + k <= N; ++k) out[i + k] += inner[i] * pref[k];
    }
    return out;
}

// Walks the partitions of `remaining` with parts <= cap, in nonincreasing
// order; `run` tracks the multiplicity of the current (smallest so far) part.
void enum_parts(long remaining, long cap, long last, long run, BigInt& total) {
    if (remaining == 0) {
        total += run;
        return;
    }
    for (long k = std::min(remaining, cap); k >= 1; --k) {
        long nrun = (k == last) ? run + 1 : 1;
        enum_parts(remaining - k, k, k, nrun, total);
    }
}

}  // namespace

BigInt p_oracle(long n) {
    if (n < 0) throw std::domain_error("p_oracle: requires n >= 0");
    std::lock_guard<std::mutex> lock(p_mutex);
    if (n >= static_cast<long>(p_table.size())) extend_p_table(n);
    return p_table[n];
}

BigInt spt_oracle_enum(long n, long cap) {
    if (n < 1) throw std::domain_error("spt_oracle_enum: requires n >= 1");
    if (n > cap)
        throw std::length_error(
            "spt_oracle_enum: n exceeds the enumeration cap; use spt_oracle_series");
    BigInt total = 0;
    enum_parts(n, n, 0, 0, total);
    return total;
}

BigInt spt_oracle_series(long n) {
    if (n < 1) throw std::domain_error("spt_oracle_series: requires n >= 1");
    std::lock_guard<std::mutex> lock(spt_mutex);
    if (n >= static_cast<long>(spt_table.size())) {
        long grow = std::max<long>(n, 2 * static_cast<long>(spt_table.size()));
        auto coeffs = expand_spt_series(grow);
        spt_table = std::move(coeffs);
    }
    return spt_table[n];
}

Rational s_coeff(long n) {
    if (n < 1) throw std::domain_error("s_coeff: requires n >= 1");
    Rational s(spt_oracle_series(n));
    s += Rational(BigInt(24 * n - 1) * p_oracle(n), 12);
    s.canonicalize();
    return s;
}

}  // namespace sptfn
