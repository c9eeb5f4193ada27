#include "sptfn/modfun.hpp"

#include "sptfn/numkernel.hpp"
#include "sptfn/qforms.hpp"
#include "sptfn/qseries.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace sptfn;

namespace {
BigComplex tau_of(double x, double y, long prec) {
    return BigComplex(BigReal::of(x, prec), BigReal::of(y, prec));
}
}  // namespace

TEST_CASE("QSeries arithmetic") {
    // 1/(1-q) = 1 + q + q^2 + ...
    QSeries one_minus_q{0, 10, {Rational(1), Rational(-1)}};
    QSeries inv = qs_reciprocal(one_minus_q);
    for (long e = 0; e <= 10; ++e) CHECK(inv.at(e) == 1);
    // product truncation: (1-q) * 1/(1-q) = 1
    QSeries prod = qs_mul(one_minus_q, inv);
    CHECK(prod.at(0) == 1);
    for (long e = 1; e <= prod.order; ++e) CHECK(prod.at(e) == 0);
    // Laurent reciprocal: 1/(q(1-q)) has lead -1
    QSeries shifted = one_minus_q;
    shifted.lead += 1;
    shifted.order += 1;
    QSeries linv = qs_reciprocal(shifted);
    CHECK(linv.lead == -1);
    CHECK(linv.at(-1) == 1);
    CHECK(linv.at(3) == 1);
    // dilation and derivative
    QSeries d3 = qs_dilate(one_minus_q, 3);
    CHECK(d3.at(0) == 1);
    CHECK(d3.at(3) == -1);
    QSeries dq = qs_qderiv(shifted);  // q - 2q^2 -> q... derivative: q(1) - q^2(2)
    CHECK(dq.at(1) == 1);
    CHECK(dq.at(2) == -2);
}

TEST_CASE("eta at i matches the closed form and the product oracle") {
    const long prec = 192;
    BigComplex tau = tau_of(0.0, 1.0, prec);
    BigComplex v = eta_eval(make_context(tau, prec));
    // Gamma(1/4) / (2 pi^{3/4})
    BigReal g14 = gamma(BigReal::of(Rational(1, 4), prec));
    BigReal expect = g14 / (ldexp2(exp(log(BigReal::pi(prec)) * 3 / 4), 1));
    CHECK((abs(v.re - expect) / expect).to_double() < 1e-50);
    CHECK(std::abs(v.im.to_double()) < 1e-50);
    CHECK(v.re.to_double() == doctest::Approx(0.76822540).epsilon(1e-8));

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> xd(-0.5, 0.5), yd(0.05, 2.0);
    for (int i = 0; i < 100; ++i) {
        BigComplex t = tau_of(xd(rng), yd(rng), prec);
        BigComplex a = eta_eval(make_context(t, prec));
        BigComplex b = oracles::eta_product(t, prec);
        CHECK((abs(a - b) / abs(b)).to_double() < std::ldexp(1.0, -(prec - 40)));
    }
}

TEST_CASE("eta transformation laws") {
    const long prec = 160;
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> xd(-0.45, 0.45), yd(0.4, 1.6);
    for (int i = 0; i < 8; ++i) {
        BigComplex tau = tau_of(xd(rng), yd(rng), prec);
        BigComplex lhs = eta_eval(make_context(tau + BigReal::of(1, prec), prec));
        BigComplex rhs = unit_exp(Rational(1, 24), prec) * eta_eval(make_context(tau, prec));
        CHECK(abs(lhs - rhs).to_double() < 1e-40);
        // eta(-1/tau) = sqrt(-i tau) eta(tau)
        BigComplex minus_inv =
            BigComplex(BigReal::of(-1, prec), BigReal(prec)) / tau;
        BigComplex lhs2 = eta_eval(make_context(minus_inv, prec));
        BigComplex mi_tau(tau.im, -tau.re);  // -i tau
        BigComplex rhs2 = sqrt(mi_tau) * eta_eval(make_context(tau, prec));
        CHECK(abs(lhs2 - rhs2).to_double() < 1e-40);
    }
}

TEST_CASE("Eisenstein values") {
    const long prec = 160;
    // E2(i) = 3/pi
    BigComplex e2 = e2_eval(make_context(tau_of(0.0, 1.0, prec), prec));
    BigReal expect = BigReal::of(3, prec) / BigReal::pi(prec);
    CHECK(std::abs(e2.re.to_double() - expect.to_double()) < 1e-40);
    CHECK(std::abs(e2.im.to_double()) < 1e-40);
    // E4(-1/tau) = tau^4 E4(tau)
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> xd(-0.4, 0.4), yd(0.6, 1.4);
    for (int i = 0; i < 6; ++i) {
        BigComplex tau = tau_of(xd(rng), yd(rng), prec);
        BigComplex minus_inv = BigComplex(BigReal::of(-1, prec), BigReal(prec)) / tau;
        BigComplex lhs = e4_eval(make_context(minus_inv, prec));
        BigComplex t2 = tau * tau;
        BigComplex rhs = t2 * t2 * e4_eval(make_context(tau, prec));
        CHECK((abs(lhs - rhs) / abs(rhs)).to_double() < 1e-40);
    }
    // q -> 0 limit
    BigComplex far = e4_eval(make_context(tau_of(0.0, 1000.0, prec), prec));
    CHECK(abs(far - BigComplex(BigReal::of(1, prec), BigReal(prec))).to_double() <
          std::ldexp(1.0, -(prec - 4)));
}

TEST_CASE("principal parts of f and the completed P") {
    const long prec = 128;
    // f(iy) - q^{-1} tends to the constant term; difference of two heights
    auto f_minus_pole = [&](double y) {
        BigComplex tau = tau_of(0.0, y, prec);
        BigReal qinv = exp(ldexp2(BigReal::pi(prec), 1) * BigReal::of(y, prec));
        return f_eval(tau, prec).re - qinv;
    };
    BigReal c8 = f_minus_pole(8.0), c10 = f_minus_pole(10.0);
    CHECK(std::abs(c8.to_double() - c10.to_double()) < 1e-12);
    // P(iy) q -> 1 - 1/(2 pi y)
    double y = 8.0;
    BigComplex tau = tau_of(0.0, y, prec);
    BigReal q = exp(ldexp2(BigReal::pi(prec), 1) * BigReal::of(-y, prec));
    double lhs = (P_eval(tau, prec).re * q).to_double();
    double rhs = 1.0 - 1.0 / (2.0 * 3.14159265358979323846 * y);
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("Gamma_0(6) and W_6 invariance of P and f") {
    const long prec = 192;
    const double pts[2][2] = {{-0.31, 0.41}, {0.22, 0.63}};
    for (const auto& p : pts) {
        BigComplex tau = tau_of(p[0], p[1], prec);
        BigComplex f0 = f_eval(tau, prec), p0 = P_eval(tau, prec);
        BigComplex shift = tau + BigReal::of(1, prec);
        BigComplex six = BigReal::of(6, prec) * tau;
        BigComplex gam = tau / (six + BigReal::of(1, prec));
        BigComplex w6 = BigComplex(BigReal::of(-1, prec), BigReal(prec)) / six;
        for (const BigComplex& image : {shift, gam, w6}) {
            CHECK(abs(f_eval(image, prec) - f0).to_double() < 1e-35);
            CHECK(abs(P_eval(image, prec) - p0).to_double() < 1e-35);
        }
    }
}

TEST_CASE("trace identity at n = 1: sum of P over the class equals 23") {
    const long prec = 256;
    BigComplex sum(prec);
    for (const QForm& q : class_reps(1)) sum = sum + P_eval(root(q, prec), prec);
    CHECK(std::abs(sum.re.to_double() - 23.0) < 1e-30);
    CHECK(std::abs(sum.im.to_double()) < 1e-30);
}

TEST_CASE("dual-precision determinism") {
    const long prec = 160;
    for (const auto& pt : {std::pair<double, double>{-0.29, 0.37},
                           std::pair<double, double>{0.11, 0.92}}) {
        BigComplex tau = tau_of(pt.first, pt.second, prec + 64);
        BigComplex a = P_eval(tau, prec);
        BigComplex b = P_eval(tau, prec + 64);
        CHECK((abs(a - b) / abs(b)).to_double() < std::ldexp(1.0, -(prec - 16)));
        BigComplex c = f_eval(tau, prec);
        BigComplex d = f_eval(tau, prec + 64);
        CHECK((abs(c - d) / abs(d)).to_double() < std::ldexp(1.0, -(prec - 16)));
    }
}

TEST_CASE("Petersson norm quadrature") {
    const long prec = 128;
    BigReal tol = BigReal::of(1e-5, prec);
    BigReal got = petersson_eta_norm(tol);
    BigReal expect = BigReal::pi(prec) / (BigReal::of(3, prec) * sqrt(BigReal::of(6, prec)));
    CHECK(std::abs(got.to_double() - expect.to_double()) < 1e-5);
    // halving the tolerance stays within the old tolerance of the new result
    BigReal finer = petersson_eta_norm(ldexp2(tol, -1));
    CHECK(std::abs(got.to_double() - finer.to_double()) < 1e-5);
    CHECK_THROWS_AS(petersson_eta_norm(BigReal::of(0, prec)), std::domain_error);
}
