#include "sptfn/kloosterman.hpp"

#include "sptfn/numkernel.hpp"

#include "doctest.h"

#include <random>
#include <sstream>

using namespace sptfn;

TEST_CASE("a_direct fixed values") {
    const long prec = 64;
    for (long n : {-3L, 0L, 1L, 7L}) CHECK(a_direct(n, 1, prec).to_double() == doctest::Approx(1.0));
    CHECK(a_direct(1, 2, prec).to_double() == doctest::Approx(-1.0));
    CHECK_THROWS_AS(a_direct(1, 0, prec), std::domain_error);
}

TEST_CASE("a_selberg fixed values and cross-oracle") {
    const long prec = 64;
    CHECK(a_selberg(1, 2, prec).to_double() == doctest::Approx(-1.0));
    for (long n : {-2L, 0L, 3L}) CHECK(a_selberg(n, 1, prec).to_double() == doctest::Approx(1.0));
    CHECK(std::abs(a_selberg(1, 5, prec).to_double() - a_direct(1, 5, prec).to_double()) <
          1e-12);
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> nd(-50, 80), cd(1, 300);
    for (int i = 0; i < 200; ++i) {
        long n = nd(rng), c = cd(rng);
        double diff = std::abs(a_selberg(n, c, prec).to_double() -
                               a_direct(n, c, prec).to_double());
        CHECK(diff < std::sqrt(static_cast<double>(c)) * std::ldexp(1.0, -44));
    }
}

TEST_CASE("k_classical fixed values") {
    const long prec = 64;
    auto phi = [](long c) {
        long r = 0;
        for (long d = 0; d < c; ++d)
            if (std::gcd(d, c) == 1) ++r;
        return r;
    };
    for (long c : {1L, 2L, 6L, 12L, 30L})
        CHECK(k_classical(0, 0, c, prec).to_double() == doctest::Approx(double(phi(c))));
    CHECK(k_classical(1, 1, 3, prec).to_double() == doctest::Approx(-1.0));
    CHECK(k_classical(1, 1, 2, prec).to_double() == doctest::Approx(1.0));
}

TEST_CASE("s_eta identities") {
    const long prec = 64;
    BigComplex sqrt_i = unit_exp(Rational(1, 8), prec);
    // S(1,0,2,chi) = sqrt(i) A_2(1) = -e^{i pi/4}
    BigComplex v = s_eta(1, 0, 2, prec);
    CHECK(v.re.to_double() == doctest::Approx(-0.7071067811865476));
    CHECK(v.im.to_double() == doctest::Approx(-0.7071067811865476));
    // c = 1 collapses to sqrt(i)
    BigComplex w = s_eta(1, 1, 1, prec);
    CHECK(w.re.to_double() == doctest::Approx(0.7071067811865476));
    CHECK(w.im.to_double() == doctest::Approx(0.7071067811865476));
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> nd(-30, 40), cd(1, 100);
    for (int i = 0; i < 100; ++i) {
        long n = nd(rng), c = cd(rng);
        BigComplex lhs = sqrt_i * BigComplex(a_direct(n, c, prec), BigReal(prec));
        BigComplex rhs = s_eta(1, 1 - n, c, prec);
        CHECK(abs(lhs - rhs).to_double() <
              std::sqrt(static_cast<double>(c)) * std::ldexp(1.0, -40));
    }
}

TEST_CASE("lehmer bound values and strictness") {
    CHECK(lehmer_bound(1).to_double() == doctest::Approx(1.0));
    CHECK(lehmer_bound(12).to_double() == doctest::Approx(2.0 * std::sqrt(12.0)));
    CHECK(lehmer_bound(15).to_double() == doctest::Approx(4.0 * std::sqrt(15.0)));
    CHECK(omega_odd(1) == 0);
    CHECK(omega_odd(64) == 0);
    CHECK(omega_odd(45) == 2);
    const long prec = 64;
    for (long c = 2; c <= 120; ++c)
        for (long n : {-4L, 0L, 1L, 5L, 23L})
            CHECK(abs(a_direct(n, c, prec)) < lehmer_bound(c, prec));
}

TEST_CASE("pentagonal witnesses") {
    auto w0 = pentagonal_index(0);
    REQUIRE(w0.has_value());
    CHECK(w0->k == 0);
    CHECK(w0->sign == 1);
    auto w1 = pentagonal_index(1);
    REQUIRE(w1.has_value());
    CHECK(w1->k == 1);
    CHECK(w1->branch == PentagonalWitness::Branch::kMinus);
    CHECK(w1->sign == -1);
    CHECK(!pentagonal_index(3).has_value());
    CHECK(!pentagonal_index(-7).has_value());
    for (long k = 0; k <= 50; ++k) {
        for (long val : {k * (3 * k - 1) / 2, k * (3 * k + 1) / 2}) {
            auto w = pentagonal_index(val);
            REQUIRE(w.has_value());
            CHECK(w->k == k);
            CHECK(w->sign == ((k % 2 == 0) ? 1 : -1));
        }
    }
}

TEST_CASE("A_c(n) depends only on n mod c") {
    const long prec = 64;
    for (long c : {5L, 12L, 49L}) {
        for (long n : {-9L, 2L, 17L}) {
            CHECK(std::abs(a_direct(n, c, prec).to_double() -
                           a_direct(n + c, c, prec).to_double()) < 1e-14);
        }
    }
}

TEST_CASE("summatory series structure") {
    const long prec = 64;
    SummatorySeries s = summatory(-1, 100, prec);
    CHECK(s.main_term_coeff.to_double() == doctest::Approx(-2.10591).epsilon(1e-5));
    // telescoping is exact at working precision
    for (size_t j = 1; j < s.rows.size(); ++j) {
        BigReal expect = s.rows[j - 1].partial_sum + s.rows[j].a_c / s.rows[j].c;
        CHECK(cmp(expect, s.rows[j].partial_sum) == 0);
    }
    // final partial sum equals the direct-path recomputation
    BigReal direct(prec);
    for (long c = 1; c <= 100; ++c) direct = direct + a_direct(-1, c, prec) / c;
    CHECK(std::abs(direct.to_double() - s.rows.back().partial_sum.to_double()) < 1e-10);

    SummatorySeries z = summatory(1, 30, prec);
    CHECK(z.main_term_coeff.is_zero());
}

TEST_CASE("summatory output is independent of the block count") {
    const long prec = 64;
    SummatorySeries a = summatory(-1, 60, prec, 1);
    SummatorySeries b = summatory(-1, 60, prec, 7);
    CHECK(a.to_csv() == b.to_csv());
    std::istringstream is(a.to_csv());
    std::string header;
    std::getline(is, header);
    CHECK(header == "c,A_c,partial_sum,main_term");
}
