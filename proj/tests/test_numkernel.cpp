#include "sptfn/numkernel.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace sptfn;

namespace {
double rel_err(const BigReal& got, const BigReal& want) {
    if (want.is_zero()) return abs(got).to_double();
    return (abs(got - want) / abs(want)).to_double();
}
}  // namespace

TEST_CASE("bessel_i_half against the power-series oracle") {
    const long prec = 128;
    CHECK(rel_err(bessel_i_half(BigReal::of(1, prec), prec),
                  oracles::bessel_series(BigReal::of(1, prec), 1, prec)) < 1e-35);
    CHECK(bessel_i_half(BigReal::of(1, prec), prec).to_double() ==
          doctest::Approx(0.93767488).epsilon(1e-8));
    CHECK(bessel_i_half(BigReal::of(2, prec), prec).to_double() ==
          doctest::Approx(2.04623).epsilon(1e-5));
    for (double x : {0.001, 0.037, 0.5, 3.25, 10.0, 55.5}) {
        BigReal xb = BigReal::of(x, prec);
        CHECK(rel_err(bessel_i_half(xb, prec), oracles::bessel_series(xb, 1, prec)) < 1e-35);
    }
}

TEST_CASE("bessel_i_half small-x limit") {
    const long prec = 96;
    BigReal expect = sqrt(BigReal::of(2, prec) / BigReal::pi(prec));
    for (int k = 4; k <= 40; k += 12) {
        BigReal x = ldexp2(BigReal::of(1, prec), -k);
        BigReal ratio = bessel_i_half(x, prec) / sqrt(x);
        CHECK(rel_err(ratio, expect) < 1e-3);
    }
}

TEST_CASE("bessel_i_threehalf values and limit") {
    const long prec = 128;
    CHECK(bessel_i_threehalf(BigReal::of(1, prec), prec).to_double() ==
          doctest::Approx(0.29352533).epsilon(1e-8));
    CHECK(bessel_i_threehalf(BigReal::of(2, prec), prec).to_double() ==
          doctest::Approx(1.09947).epsilon(1e-5));
    for (double x : {1e-4, 0.003, 0.2, 0.999, 1.001, 7.5, 30.0}) {
        BigReal xb = BigReal::of(x, prec);
        CHECK(rel_err(bessel_i_threehalf(xb, prec), oracles::bessel_series(xb, 3, prec)) <
              1e-35);
    }
    // I_{3/2}(x)/x^{3/2} -> (1/3) sqrt(2/pi)
    BigReal x = ldexp2(BigReal::of(1, prec), -20);
    BigReal lim = bessel_i_threehalf(x, prec) / (x * sqrt(x));
    BigReal expect = sqrt(BigReal::of(2, prec) / BigReal::pi(prec)) / 3;
    CHECK(rel_err(lim, expect) < 1e-10);
}

TEST_CASE("bessel_i_diff values, limit, and cancellation-free evaluation") {
    const long prec = 128;
    CHECK(bessel_i_diff(BigReal::of(1, prec), prec).to_double() ==
          doctest::Approx(0.64414955).epsilon(1e-8));
    for (double x : {1e-3, 0.01, 0.25, 1.75, 12.0}) {
        BigReal xb = BigReal::of(x, prec);
        BigReal oracle = oracles::bessel_series(xb, 1, prec) -
                         oracles::bessel_series(xb, 3, prec);
        CHECK(rel_err(bessel_i_diff(xb, prec), oracle) < 1e-32);
    }
    BigReal x = ldexp2(BigReal::of(1, prec), -24);
    BigReal lim = bessel_i_diff(x, prec) / sqrt(x);
    BigReal expect = sqrt(BigReal::of(2, prec) / BigReal::pi(prec));
    CHECK(rel_err(lim, expect) < 1e-6);
}

TEST_CASE("diff equals half minus threehalf across dyadic arguments") {
    const long prec = 96;
    for (int k = 0; k <= 20; ++k) {
        BigReal x = ldexp2(BigReal::of(1, prec), -k);
        BigReal d = bessel_i_diff(x, prec);
        BigReal naive = bessel_i_half(x, prec) - bessel_i_threehalf(x, prec);
        CHECK(abs(d - naive) <= ldexp2(abs(d), -(prec - 10)));
    }
}

TEST_CASE("bessel order monotonicity") {
    const long prec = 64;
    for (double x : {0.01, 0.3, 1.0, 4.0, 20.0}) {
        BigReal xb = BigReal::of(x, prec);
        BigReal h = bessel_i_half(xb, prec);
        BigReal t = bessel_i_threehalf(xb, prec);
        CHECK(h > t);
        CHECK(t.sgn() > 0);
    }
}

TEST_CASE("bessel domain errors") {
    CHECK_THROWS_AS(bessel_i_half(BigReal::of(0, 64), 64), std::domain_error);
    CHECK_THROWS_AS(bessel_i_threehalf(BigReal::of(-1, 64), 64), std::domain_error);
    CHECK_THROWS_AS(bessel_i_diff(BigReal::of(-2.5, 64), 64), std::domain_error);
}

TEST_CASE("unit_exp fixed values") {
    const long prec = 96;
    BigComplex half = unit_exp(Rational(1, 2), prec);
    CHECK(half.re.to_double() == doctest::Approx(-1.0));
    CHECK(std::abs(half.im.to_double()) < 1e-25);
    BigComplex one = unit_exp(Rational(0), prec);
    CHECK(one.re.to_double() == doctest::Approx(1.0));
    BigComplex eighth = unit_exp(Rational(1, 8), prec);
    CHECK(eighth.re.to_double() == doctest::Approx(0.7071067811865476));
    CHECK(eighth.im.to_double() == doctest::Approx(0.7071067811865476));
}

TEST_CASE("unit_exp inverse pairs and modulus") {
    const long prec = 80;
    std::mt19937 rng(20260809);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 1000; ++i) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        BigComplex z = unit_exp(r, prec);
        BigComplex w = unit_exp(-r, prec);
        BigComplex prod = z * w;
        CHECK(std::abs(prod.re.to_double() - 1.0) < 1e-20);
        CHECK(std::abs(prod.im.to_double()) < 1e-20);
        CHECK(std::abs(abs(z).to_double() - 1.0) < 1e-20);
    }
}
