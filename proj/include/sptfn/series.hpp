#ifndef SPTFN_SERIES_HPP
#define SPTFN_SERIES_HPP

#include "sptfn/bigfloat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sptfn {

struct SeriesReport {
    long n = 0;
    std::string method;
    BigReal value;
    BigInt rounded;
    BigReal residual;  // |value - rounded|
    long terms_used = 0;
    long prec_bits = 0;
    std::optional<BigReal> tail_bound;
    std::optional<std::string> smoothing;
    // downsampled (c, partial sum) trace, present when requested
    std::optional<std::vector<std::pair<long, BigReal>>> partial_sums;

    std::string to_json() const;
};

struct TraceRow {
    long terms;
    BigReal partial_sum;
    BigReal distance_to_integer;
};

// p(n) = 2 pi (24n-1)^{-3/4} sum_c (A_c(n)/c) I_{3/2}(pi sqrt(24n-1)/(6c)).
// terms = 0 picks N automatically so that a rigorous tail bound (Lehmer +
// elementary divisor-sum and Bessel estimates) is below 1/4; the rounded
// value is checked against the exact recurrence for n <= oracle_cap.
SeriesReport p_rademacher(long n, long terms, long prec, bool keep_trace = false,
                          long oracle_cap = 100000);

struct TailAverage {
    long window = 0;  // 0 = no smoothing
};

// spt(n) = (pi/6)(24n-1)^{1/4} sum_c (A_c(n)/c)(I_{1/2}-I_{3/2})(...).
// Partial sum through c = N; with a tail-average window w the reported value
// is the mean of the last w partial sums (the series converges only
// conditionally and carries no rigorous tail bound).
SeriesReport spt_series(long n, long terms, long prec, TailAverage smoothing,
                        bool keep_trace = false);

inline long spt_default_terms(long n) { return std::max<long>(5000, 50 * n); }

// Table of (N, partial sum, distance to nearest integer) from a report built
// with keep_trace; throws std::logic_error when the trace was not retained.
std::vector<TraceRow> convergence_trace(const SeriesReport& report);

}  // namespace sptfn

#endif
