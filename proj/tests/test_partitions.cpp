#include "sptfn/partitions.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace sptfn;

TEST_CASE("p(n) fixed values and DP cross-check") {
    CHECK(p_oracle(0) == 1);
    CHECK(p_oracle(1) == 1);
    CHECK(p_oracle(5) == 7);
    CHECK(p_oracle(100) == BigInt("190569292"));
    CHECK_THROWS_AS(p_oracle(-1), std::domain_error);
    for (long n = 0; n <= 500; ++n) CHECK(p_oracle(n) == oracles::partition_count_dp(n));
}

TEST_CASE("spt by enumeration") {
    CHECK(spt_oracle_enum(1) == 1);
    CHECK(spt_oracle_enum(2) == 3);
    CHECK(spt_oracle_enum(3) == 5);
    CHECK(spt_oracle_enum(4) == 10);
    CHECK(spt_oracle_enum(5) == 14);
    CHECK_THROWS_AS(spt_oracle_enum(0), std::domain_error);
    CHECK_THROWS_AS(spt_oracle_enum(61), std::length_error);
}

TEST_CASE("spt series expansion equals enumeration on the overlap") {
    for (long n = 1; n <= 60; ++n) CHECK(spt_oracle_series(n) == spt_oracle_enum(n));
}

TEST_CASE("spt dominates p") {
    for (long n = 1; n <= 200; ++n) CHECK(spt_oracle_series(n) >= p_oracle(n));
}

TEST_CASE("s(n) composite coefficient") {
    CHECK(s_coeff(1) == Rational(35, 12));
    CHECK(s_coeff(2) == Rational(65, 6));
    for (long n = 1; n <= 100; ++n) {
        Rational v = s_coeff(n) * 12;
        v.canonicalize();
        CHECK(v.get_den() == 1);
    }
}
