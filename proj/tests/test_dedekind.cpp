#include "sptfn/dedekind.hpp"

#include "sptfn/modfun.hpp"
#include "sptfn/numkernel.hpp"

#include "doctest.h"

#include <numeric>
#include <random>

using namespace sptfn;

TEST_CASE("naive Dedekind sums match hand values") {
    CHECK(dedekind_sum_naive(0, 1) == Rational(0));
    CHECK(dedekind_sum_naive(1, 3) == Rational(1, 18));
    CHECK(dedekind_sum_naive(5, 7) == Rational(-1, 14));
    CHECK_THROWS_AS(dedekind_sum_naive(1, 0), std::domain_error);
}

TEST_CASE("reciprocity-based sums match hand values") {
    CHECK(dedekind_sum(1, 5) == Rational(1, 5));
    CHECK(dedekind_sum(2, 5) == Rational(0));
    CHECK(dedekind_sum(0, 1) == Rational(0));
    CHECK_THROWS_AS(dedekind_sum(2, 4), std::invalid_argument);
}

TEST_CASE("fast sum equals naive sum on all coprime pairs c <= 500") {
    for (long c = 1; c <= 500; ++c) {
        for (long d = 0; d < c; ++d) {
            if (std::gcd(d, c) != 1) continue;
            CHECK(dedekind_sum(d, c) == dedekind_sum_naive(d, c));
        }
        if (c == 1) CHECK(dedekind_sum(0, 1) == dedekind_sum_naive(0, 1));
    }
}

TEST_CASE("reciprocity and symmetry laws") {
    for (long c = 1; c <= 60; ++c) {
        for (long d = 1; d <= 60; ++d) {
            if (std::gcd(c, d) != 1) continue;
            Rational lhs = dedekind_sum(d, c) + dedekind_sum(c, d);
            Rational rhs(-1, 4);
            rhs += Rational(BigInt(d) * d + BigInt(c) * c + 1, BigInt(12) * c * d);
            rhs.canonicalize();
            CHECK(lhs == rhs);
        }
    }
    for (long c = 2; c <= 90; ++c) {
        for (long d = 1; d < c; ++d) {
            if (std::gcd(d, c) != 1) continue;
            CHECK(dedekind_sum(c - d, c) == -dedekind_sum(d, c));
            // 6c s(d,c) is an integer
            Rational v = dedekind_sum(d, c) * Rational(6 * c);
            v.canonicalize();
            CHECK(v.get_den() == 1);
        }
    }
}

namespace {
SL2Matrix random_gamma(std::mt19937& rng) {
    // random word in T and S with positive lower-left entry
    SL2Matrix g = sl2_identity();
    std::uniform_int_distribution<int> len(2, 12);
    std::uniform_int_distribution<int> shift(-4, 4);
    int steps = len(rng);
    for (int i = 0; i < steps; ++i) {
        g = SL2Matrix{1, shift(rng), 0, 1} * g;
        g = SL2Matrix{0, -1, 1, 0} * g;
    }
    if (g.c < 0) g = SL2Matrix{-g.a, -g.b, -g.c, -g.d};
    if (g.c == 0) g = SL2Matrix{0, -1, 1, 0} * g;
    if (g.c < 0) g = SL2Matrix{-g.a, -g.b, -g.c, -g.d};
    return g;
}
}  // namespace

TEST_CASE("eta multiplier fixed values") {
    const long prec = 128;
    BigComplex s = eta_multiplier(SL2Matrix{0, -1, 1, 0}, prec);
    CHECK(s.re.to_double() == doctest::Approx(0.7071067811865476));
    CHECK(s.im.to_double() == doctest::Approx(-0.7071067811865476));
    // (1,0;1,1) -> e^{-i pi/12}
    BigComplex t = eta_multiplier(SL2Matrix{1, 0, 1, 1}, prec);
    CHECK(t.re.to_double() == doctest::Approx(std::cos(3.14159265358979 / 12)));
    CHECK(t.im.to_double() == doctest::Approx(-std::sin(3.14159265358979 / 12)));
    CHECK_THROWS_AS(eta_multiplier(SL2Matrix{1, 0, 0, 1}, prec), std::domain_error);
}

TEST_CASE("eta multiplier is unit modulus") {
    const long prec = 96;
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        SL2Matrix g = random_gamma(rng);
        REQUIRE(g.is_unimodular());
        REQUIRE(g.c > 0);
        CHECK(std::abs(abs(eta_multiplier(g, prec)).to_double() - 1.0) < 1e-25);
    }
}

TEST_CASE("eta automorphy under random gamma") {
    const long prec = 160;
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> xd(-0.5, 0.5), yd(0.6, 1.8);
    int done = 0;
    for (int i = 0; i < 400 && done < 12; ++i) {
        SL2Matrix g = random_gamma(rng);
        BigComplex tau(BigReal::of(xd(rng), prec), BigReal::of(yd(rng), prec));
        BigComplex ctd = BigComplex(BigReal::of(g.c, prec), BigReal(prec)) * tau +
                         BigReal::of(g.d, prec);
        // keep Im(g tau) away from 0 so the direct series stays well conditioned
        if ((ctd.re * ctd.re + ctd.im * ctd.im).to_double() > 30.0) continue;
        ++done;
        BigComplex gtau = (BigComplex(BigReal::of(g.a, prec), BigReal(prec)) * tau +
                           BigReal::of(g.b, prec)) /
                          ctd;
        BigComplex lhs = eta_eval(make_context(gtau, prec));
        BigComplex rhs = eta_multiplier(g, prec) * sqrt(ctd) *
                         eta_eval(make_context(tau, prec));
        BigReal err = abs(lhs - rhs);
        BigReal scale = abs(rhs);
        CHECK((err / scale).to_double() < std::ldexp(1.0, -(prec - 48)));
    }
    CHECK(done == 12);
}
