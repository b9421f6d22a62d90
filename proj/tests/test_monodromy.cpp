#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pii/identity_suite.hpp"
#include "pii/monodromy.hpp"

using namespace pii;
using Catch::Matchers::WithinAbs;

TEST_CASE("stokes data from (alpha, k)") {
    StokesTriple s0 = stokes_from_ak(0.0, 0.0);
    CHECK(std::abs(s0.s1) == 0.0);
    CHECK(std::abs(s0.s2) == 0.0);
    CHECK(std::abs(s0.s3) == 0.0);

    Complex k(0.4, 0.0);
    StokesTriple sk = stokes_from_ak(0.0, k);
    CHECK_THAT(std::abs(sk.s1 + kI * k), WithinAbs(0.0, 1e-16));
    CHECK_THAT(std::abs(sk.s3 - kI * k), WithinAbs(0.0, 1e-16));

    StokesTriple sq = stokes_from_ak(0.25, 0.0);
    CHECK_THAT(std::abs(sq.s1 + std::sqrt(2.0) / 2.0), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(sq.s3 + std::sqrt(2.0) / 2.0), WithinAbs(0.0, 1e-15));

    // s1 + s3 = -2 sin(pi alpha)
    for (Complex a : {Complex(0.3, 0.0), Complex(0.0, 0.4), Complex(0.1, 0.2)}) {
        StokesTriple s = stokes_from_ak(a, Complex(0.2, 0.1));
        CHECK_THAT(std::abs(s.s1 + s.s3 + 2.0 * std::sin(kPi * a)), WithinAbs(0.0, 1e-14));
    }
}

TEST_CASE("constraint residual") {
    for (Complex a : {Complex(0.0, 0.0), Complex(0.25, 0.0), Complex(0.0, 0.3)}) {
        for (Complex k : {Complex(0.5, 0.0), Complex(0.0, 0.7)}) {
            CHECK(constraint_residual(stokes_from_ak(a, k), a) <=
                  1e-14 * (1.0 + std::abs(std::sin(kPi * a))));
        }
    }
    // the tronquee-style triple satisfies the constraint for any middle entry
    for (Complex a : {Complex(0.2, 0.0), Complex(-0.3, 0.0)}) {
        for (Complex w : {Complex(0.0, 0.0), Complex(0.3, 0.0), Complex(2.0, 0.0)}) {
            StokesTriple s{std::exp(-kI * kPi * (a + 0.5)), w, std::exp(kI * kPi * (a + 0.5))};
            CHECK_THAT(constraint_residual(s, a), WithinAbs(0.0, 1e-14));
        }
    }
    StokesTriple bad{1.0, 0.0, 0.0};
    CHECK_THAT(constraint_residual(bad, 0.0), WithinAbs(1.0, 1e-15));
}

TEST_CASE("family classification") {
    CHECK(classify_family(0.25, 0.5) == Family::RealAS);
    CHECK(classify_family(Complex(0.0, 0.3), Complex(0.0, 0.4)) == Family::ImaginaryAS);
    CHECK(classify_family(0.0, 1.0) == Family::HMBoundary);
    CHECK(classify_family(0.0, -1.0) == Family::HMBoundary);
    CHECK(classify_family(0.0, 0.0) == Family::RealAS);  // precedence over imaginary
    CHECK(classify_family(0.25, std::cos(kPi * 0.25)) == Family::HMBoundary);
    CHECK(classify_family(0.25, 0.9) == Family::Other);
    CHECK(classify_family(0.7, 0.1) == Family::Other);
    CHECK(classify_family(Complex(0.1, 0.1), 0.2) == Family::Other);
    CHECK(classify_family(Complex(0.0, 0.3), 0.0) == Family::ImaginaryAS);
}

TEST_CASE("connection matrix E") {
    Matrix2 e0 = connection_E(0.0);
    CHECK_THAT(std::abs(e0.a11 - 1.0), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(e0.a12 - kI), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(e0.a21 - kI * 0.5), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(e0.a22 - 0.5), WithinAbs(0.0, 1e-15));

    for (Complex a : {Complex(0.0, 0.0), Complex(0.25, 0.0), Complex(-0.25, 0.0),
                      Complex(0.0, 0.3)}) {
        CHECK_THAT(std::abs(connection_E(a).det() - 1.0), WithinAbs(0.0, 1e-14));
    }
    CHECK_THROWS_AS(connection_E(0.5), singular_input_error);
}

TEST_CASE("cyclic connection relation") {
    for (Complex a : {Complex(0.0, 0.0), Complex(0.25, 0.0), Complex(-0.25, 0.0),
                      Complex(0.4, 0.0), Complex(-0.4, 0.0), Complex(0.0, 0.2),
                      Complex(0.0, 0.5)}) {
        Complex k = a.imag() == 0.0 ? Complex(0.4 * std::cos(kPi * a.real()), 0.0)
                                    : Complex(0.0, 0.4);
        StokesTriple s = stokes_from_ak(a, k);
        Matrix2 e = connection_E(a);
        Matrix2 lhs = e * stokes_matrix_lower(s.s1) * stokes_matrix_upper(s.s2) *
                      stokes_matrix_lower(s.s3);
        Matrix2 rhs = sigma2() * matrix_M(a).inverse() * e * sigma2();
        CHECK((lhs - rhs).frobenius_norm() <= 1e-12);
    }
}

TEST_CASE("matrix M") {
    Matrix2 m_half = matrix_M(0.5);
    CHECK(((-1.0 * kI) * sigma2() - m_half).frobenius_norm() < 1e-15);
    for (Complex a : {Complex(0.0, 0.0), Complex(0.3, 0.0), Complex(0.0, 0.2)}) {
        CHECK_THAT(std::abs(matrix_M(a).det() - 1.0), WithinAbs(0.0, 1e-14));
    }
    // alpha = 0 explicit value
    Matrix2 m0 = matrix_M(0.0);
    Matrix2 expect = Matrix2::diag(-kI * std::exp(-kI * kPi / 2.0), -kI * std::exp(kI * kPi / 2.0)) *
                     sigma2();
    CHECK((m0 - expect).frobenius_norm() < 1e-15);
}

TEST_CASE("matrix D") {
    Matrix2 d0 = matrix_D(0.0);
    CHECK_THAT(std::abs(d0.a11 - std::exp(kI * kPi / 4.0)), WithinAbs(0.0, 1e-14));
    CHECK(std::abs(d0.a12) == 0.0);
    CHECK(std::abs(d0.a21) == 0.0);
    for (Complex a : {Complex(0.0, 0.0), Complex(0.25, 0.0), Complex(-0.3, 0.0),
                      Complex(0.0, 0.2)}) {
        ParametrixMatrices m = parametrix_matrices(a);
        CHECK(((m.E_hat * m.S1_hat) - matrix_D(a) * connection_E(a)).frobenius_norm() <= 1e-12);
    }
}

TEST_CASE("K: definition vs closed form") {
    Matrix2 k00 = matrix_K_definition(0.0, 0.0);
    CHECK((k00 - Matrix2::identity()).frobenius_norm() < 1e-14);

    Matrix2 kc = matrix_K_closed(0.0, 0.5);
    double r = 1.0 / std::sqrt(0.75);
    CHECK_THAT(std::abs(kc.a11 - 0.5 * r), WithinAbs(0.0, 1e-14));
    CHECK_THAT(std::abs(kc.a22 - 1.5 * r), WithinAbs(0.0, 1e-14));

    for (auto [a, k] : std::vector<std::pair<Complex, Complex>>{
             {0.25, 0.3}, {-0.25, 0.5}, {0.4, 0.2}, {Complex(0.0, 0.3), Complex(0.0, 0.6)}}) {
        Matrix2 kd = matrix_K_definition(a, k);
        Matrix2 kcl = matrix_K_closed(a, k);
        CHECK((kd - kcl).frobenius_norm() <= 1e-12);
        CHECK(std::abs(kd.a12) <= 1e-12);
        CHECK(std::abs(kd.a21) <= 1e-12);
        CHECK_THAT(std::abs(kcl.det() - 1.0), WithinAbs(0.0, 1e-13));
    }
    CHECK_THROWS_AS(matrix_K_closed(0.0, 1.0), singular_input_error);
}

TEST_CASE("nu constant") {
    CHECK(std::abs(nu_constant(0.0, 0.0)) == 0.0);
    for (double k : {0.3, 0.5, 0.9}) {
        Complex nu = nu_constant(0.0, k);
        Complex expect = -std::log(1.0 - k * k) / (2.0 * kPi * kI);
        CHECK_THAT(std::abs(nu - expect), WithinAbs(0.0, 1e-15));
        CHECK_THAT(nu.real(), WithinAbs(0.0, 1e-15));
    }
    // imaginary family: 1 - s1 s3 = cosh^2(pi eta) + k0^2 > 0
    Complex nu = nu_constant(Complex(0.0, 0.3), Complex(0.0, 0.4));
    CHECK_THAT(nu.real(), WithinAbs(0.0, 1e-15));
    double expect = std::log(std::pow(std::cosh(0.3 * kPi), 2) + 0.16);
    CHECK_THAT(-2.0 * kPi * nu.imag(), WithinAbs(-expect, 1e-13));
}

TEST_CASE("model function N") {
    // nu = 0: identically I
    Matrix2 n = model_N(2.0, 0.0, 0.0);
    CHECK((n - Matrix2::identity()).frobenius_norm() == 0.0);

    // far field: ||N - I|| <= C/|z| with C bounded by 4 |nu|
    Complex a(0.0, 0.0), k(0.5, 0.0);
    Complex nu = nu_constant(a, k);
    for (double r : {1000.0, 2000.0}) {
        Matrix2 nf = model_N(Complex(r, r), a, k);
        CHECK((nf - Matrix2::identity()).frobenius_norm() <=
              4.0 * std::abs(nu) / std::abs(Complex(r, r)));
    }

    // jump across the segment approaches S_D at first order
    Matrix2 sd = segment_jump_matrix(a, k);
    double prev = 1e9;
    for (double eps : {1e-3, 1e-4, 1e-5}) {
        Matrix2 above = model_N(Complex(0.0, eps), a, k);
        Matrix2 below = model_N(Complex(0.0, -eps), a, k);
        double resid = (above * below.inverse() - sd).frobenius_norm();
        CHECK(resid < 0.11 * prev);  // ~ O(eps)
        prev = resid;
    }
    CHECK_THROWS_AS(model_N(Complex(0.2, 0.0), a, k), branch_cut_error);
}

TEST_CASE("predicted totals") {
    CHECK_THAT(std::abs(predicted_total_integral(0.0, 0.5) - 0.5 * std::log(3.0)),
               WithinAbs(0.0, 1e-15));
    CHECK(std::abs(predicted_total_integral(0.3, 0.0)) == 0.0);
    // cos-unit scaling: k = 0.5 cos(pi alpha) always gives (1/2) ln 3
    CHECK_THAT(std::abs(predicted_total_integral(0.25, 0.5 * std::cos(kPi * 0.25)) -
                        0.5 * std::log(3.0)),
               WithinAbs(0.0, 1e-14));

    CHECK_THAT(std::abs(predicted_exp_total(0.0, 0.0) - 1.0), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(predicted_exp_total(0.0, 0.5) - std::sqrt(3.0)), WithinAbs(0.0, 1e-14));
    for (auto [a, k] : std::vector<std::pair<Complex, Complex>>{
             {Complex(0.0, 0.3), Complex(0.0, 0.4)},
             {Complex(0.0, 0.1), Complex(0.0, -0.7)},
             {Complex(0.0, 0.0), Complex(0.0, 0.5)}}) {
        CHECK_THAT(std::abs(predicted_exp_total(a, k)), WithinAbs(1.0, 1e-14));
    }

    CHECK_THROWS_AS(predicted_total_integral(0.0, 1.0), unsupported_family_error);
    CHECK_THROWS_AS(predicted_exp_total(0.0, 1.0), unsupported_family_error);
    CHECK_THROWS_AS(predicted_total_integral(0.7, 0.3), unsupported_family_error);
}

TEST_CASE("limit matrix H") {
    LimitMatrixData h0 = matrix_H_and_limit(0.0, 0.0);
    CHECK_THAT(std::abs(h0.h_plus - 0.5), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(h0.h_minus - 0.5), WithinAbs(0.0, 1e-15));
    CHECK((h0.H - Matrix2::identity()).frobenius_norm() < 1e-15);

    for (auto [a, k] : std::vector<std::pair<Complex, Complex>>{
             {0.0, 0.5}, {0.25, 0.3}, {-0.25, 0.4},
             {Complex(0.0, 0.3), Complex(0.0, 0.4)}}) {
        LimitMatrixData h = matrix_H_and_limit(a, k);
        CHECK(std::abs(2.0 * h.h_minus - predicted_exp_total(a, k)) <= 1e-13);
        // H is unimodular (4 h+ h- = 1), so H H^{-1} via the adjugate is I
        Matrix2 hinv{h.h_plus + h.h_minus, kI * (h.h_minus - h.h_plus),
                     kI * (h.h_plus - h.h_minus), h.h_plus + h.h_minus};
        CHECK((h.H * hinv - Matrix2::identity()).frobenius_norm() < 1e-13);
    }
}

TEST_CASE("triangular factorizations and collapse") {
    for (auto [a, k] : std::vector<std::pair<Complex, Complex>>{
             {0.0, 0.5}, {0.25, 0.3}, {Complex(0.0, 0.2), Complex(0.0, 0.6)}}) {
        StokesTriple s = stokes_from_ak(a, k);
        ParametrixMatrices m = parametrix_matrices(a);
        CHECK((m.S2_hat - stokes_matrix_lower(s.s1) * stokes_matrix_lower(s.s3))
                  .frobenius_norm() <= 1e-14);
        CHECK((m.S1_hat - stokes_matrix_upper(-s.s1) * stokes_matrix_upper(-s.s3))
                  .frobenius_norm() <= 1e-14);

        Complex c = 1.0 - s.s1 * s.s3;
        Matrix2 lhs = Matrix2::diag(std::sqrt(c), 1.0 / std::sqrt(c)) *
                      stokes_matrix_upper(-s.s3 / c) * stokes_matrix_lower(-s.s1);
        Matrix2 rhs = (1.0 / std::sqrt(c)) * Matrix2{1.0, -s.s3, -s.s1, 1.0};
        CHECK((lhs - rhs).frobenius_norm() <= 1e-13);
    }
}

TEST_CASE("identity suite aggregates") {
    auto reports = run_identity_suite(GridKind::Default);
    for (const auto& r : reports) {
        INFO(r.name << " residual " << r.max_residual << " tol " << r.tolerance);
        CHECK(r.pass);
    }
    auto minimal = run_identity_suite(GridKind::Minimal);
    for (const auto& r : minimal) CHECK(r.pass);

    // an absurd override must fail at least one check
    auto forced = run_identity_suite(GridKind::Default, 1e-16);
    bool any_fail = false;
    for (const auto& r : forced) any_fail = any_fail || !r.pass;
    CHECK(any_fail);
}
