#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pii/phase_geometry.hpp"

using namespace pii;
using Catch::Matchers::WithinAbs;

TEST_CASE("cubic phase") {
    CHECK(std::abs(theta(0.0, 3.7)) == 0.0);
    // odd in lambda
    Complex l(0.7, -0.4);
    CHECK_THAT(std::abs(theta(-l, 2.0) + theta(l, 2.0)), WithinAbs(0.0, 1e-15));
    // the stationary points sit on the Im theta = 0 level set
    double x = 4.0;
    Complex lp(0.0, 0.5 * std::sqrt(x));
    CHECK_THAT(theta(lp, x).imag(), WithinAbs(0.0, 1e-14));
}

TEST_CASE("scaled phase") {
    CHECK_THAT(std::abs(theta_tilde(0.5) - Complex(0.0, -1.0 / 3.0)), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(theta_tilde(-0.5) - Complex(0.0, 1.0 / 3.0)), WithinAbs(0.0, 1e-15));

    // theta(sqrt(-x) z, x) = (-x)^{3/2} theta~(z)
    double x = -4.0;
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        Complex z(d(rng), d(rng));
        Complex lhs = theta(std::sqrt(-x) * z, x);
        Complex rhs = std::pow(-x, 1.5) * theta_tilde(z);
        CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-13));
    }
}

TEST_CASE("z map and its local inverse") {
    double x = 9.0;
    CHECK(std::abs(z_map(0.0, x)) == 0.0);
    CHECK_THAT(std::abs(z_map_derivative(0.0, x) - Complex(0.0, -x)), WithinAbs(0.0, 1e-15));

    double big_r = 0.25 * std::sqrt(x);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int i = 0; i < 30; ++i) {
        Complex l(d(rng), d(rng));
        l *= 0.5 * big_r / std::max(std::abs(l), 1.0);
        Complex back = z_map_inverse(z_map(l, x), x);
        CHECK_THAT(std::abs(back - l), WithinAbs(0.0, 1e-12));
    }
    CHECK_THROWS_AS(z_map_inverse(Complex(50.0, 0.0), x), domain_error);
}

TEST_CASE("eta and zeta") {
    CHECK(std::abs(eta(0.0)) == 0.0);
    double h = 1e-6;
    Complex deta = (eta(Complex(h, 0)) - eta(Complex(-h, 0))) / (2 * h);
    CHECK_THAT(std::abs(deta - 1.0), WithinAbs(0.0, 1e-9));
    // odd
    Complex z0(0.4, 0.3);
    CHECK_THAT(std::abs(eta(-z0) + eta(z0)), WithinAbs(0.0, 1e-15));

    CHECK(std::abs(zeta(0.5)) < 1e-15);
    // square identity zeta^2 = 4 (theta~(1/2) - theta~(z))
    for (Complex z : {Complex(0.3, 0.0), Complex(0.7, 0.0), Complex(0.5, 0.2)}) {
        Complex lhs = zeta(z) * zeta(z);
        Complex rhs = 4.0 * (theta_tilde(0.5) - theta_tilde(z));
        CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-13));
    }
    CHECK_THROWS_AS(zeta(Complex(-1.0, 0.0)), branch_cut_error);
}

TEST_CASE("descent curves") {
    double x = 4.0;
    DescentCurves c0 = descent_curves(0.0, x);
    CHECK_THAT(std::abs(c0.gamma_plus - Complex(0.0, 0.5 * std::sqrt(x))), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(c0.gamma_minus + Complex(0.0, 0.5 * std::sqrt(x))), WithinAbs(0.0, 1e-15));

    for (double t : {-5.0, -1.0, 1.0, 5.0}) {
        DescentCurves c = descent_curves(t, x);
        // stationary-phase level set: Im theta is constant (= 0) along gamma_pm
        CHECK_THAT(theta(c.gamma_plus, x).imag(), WithinAbs(0.0, 1e-12));
        CHECK_THAT(theta(c.gamma_minus, x).imag(), WithinAbs(0.0, 1e-12));
        // scaled curves carry Re theta~ = 0
        CHECK_THAT(theta_tilde(c.h_plus).real(), WithinAbs(0.0, 1e-12));
        CHECK_THAT(theta_tilde(c.h_minus).real(), WithinAbs(0.0, 1e-12));
        // lower bound on |gamma|
        double bound = std::sqrt(3.0) / 3.0 * std::abs(t) + std::sqrt(x) / 4.0;
        CHECK(std::abs(c.gamma_plus) >= bound - 1e-12);
        CHECK(std::abs(c.gamma_minus) >= bound - 1e-12);
        // conjugate pair for real t, x
        CHECK_THAT(std::abs(c.gamma_minus - std::conj(c.gamma_plus)), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("descent property of Re theta along gamma_plus") {
    double x = 4.0;
    double prev_left = theta(descent_curves(0.0, x).gamma_plus, x).real();
    double prev_right = prev_left;
    for (int i = 1; i <= 1000; ++i) {
        double t = i * 0.01;
        double right = theta(descent_curves(t, x).gamma_plus, x).real();
        double left = theta(descent_curves(-t, x).gamma_plus, x).real();
        CHECK(right < prev_right);
        CHECK(left < prev_left);
        prev_right = right;
        prev_left = left;
    }
}

TEST_CASE("phase context") {
    PhaseContext c = PhaseContext::from_x(9.0);
    CHECK(c.big_r == 0.75);
    CHECK_THAT(std::abs(c.lambda_plus - Complex(0.0, 1.5)), WithinAbs(0.0, 1e-15));
    CHECK(c.t == 0.0);
    PhaseContext n = PhaseContext::from_x(-4.0);
    CHECK_THAT(n.t, WithinAbs(8.0, 1e-14));
    CHECK_THROWS_AS(PhaseContext::from_x(0.0), domain_error);
}
