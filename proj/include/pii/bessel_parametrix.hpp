#pragma once

// The explicit Bessel-type parametrix: the entire-matrix kernel built from
// the v1/v2 series, its regularised value at the origin, the sector
// functions obtained by right-multiplication, and the large-argument
// expansion residual.

#include <cmath>
#include <complex>

#include "pii/complex_matrix.hpp"
#include "pii/errors.hpp"
#include "pii/special_functions.hpp"

namespace pii {

// Sector k in {1, 2, 3} carries the argument window (pi(k-3/2), pi(k+1/2)).
inline ArgWindow sector_window(int k) {
    if (k < 1 || k > 3) throw domain_error("sector_window: k must be 1, 2 or 3");
    return {kPi * (k - 1.5), kPi * (k + 0.5)};
}

struct ParametrixMatrices {
    Matrix2 E_hat;
    Matrix2 S1_hat;
    Matrix2 S2_hat;
};

inline ParametrixMatrices parametrix_matrices(Complex alpha) {
    Complex ca = std::cos(kPi * alpha);
    if (std::abs(ca) < 1e-12)
        throw singular_input_error("parametrix_matrices: cos(pi alpha) vanishes");
    Complex sa = std::sin(kPi * alpha);
    Complex g1 = gamma_complex(alpha + 0.5);
    Complex g2 = gamma_complex(1.5 - alpha);
    Complex two_a = std::exp(alpha * std::log(2.0));
    Complex pre = std::sqrt(kPi) / (2.0 * ca);
    Matrix2 d = Matrix2::diag(2.0 / two_a / g1, two_a / g2);
    Matrix2 rot = Matrix2::diag(std::exp(kI * kPi / 4.0), std::exp(-kI * kPi / 4.0));
    Matrix2 core{std::exp(-kI * kPi * alpha), kI, kI * std::exp(kI * kPi * alpha), 1.0};
    ParametrixMatrices m;
    m.E_hat = pre * (d * rot * core);
    m.S1_hat = {1.0, 2.0 * sa, 0.0, 1.0};
    m.S2_hat = {1.0, 0.0, -2.0 * sa, 1.0};
    return m;
}

// B(z) = (1/2) e^{-i pi/4 sigma3} [[1,1],[-1,1]] [[1,0],[-alpha/z,1]]
inline Matrix2 B_matrix(Complex z, Complex alpha) {
    if (z == Complex(0.0, 0.0)) throw singular_input_error("B_matrix: z = 0");
    Matrix2 rot = Matrix2::diag(std::exp(-kI * kPi / 4.0), std::exp(kI * kPi / 4.0));
    Matrix2 hadamard{1.0, 1.0, -1.0, 1.0};
    Matrix2 shear{1.0, 0.0, -alpha / z, 1.0};
    return 0.5 * (rot * hadamard * shear);
}

// Kernel matrix B(z) [[v1, v2],[v1', v2']]; det = (1 - 2 alpha)/2.
inline Matrix2 phi0(Complex z, Complex alpha, ArgWindow w, SeriesPolicy pol = {}) {
    Matrix2 v{v1(z, alpha, w, pol), v2(z, alpha, w, pol),
              v1_prime(z, alpha, w, pol), v2_prime(z, alpha, w, pol)};
    return B_matrix(z, alpha) * v;
}

// lim_{z->0} phi0(z) z^{-alpha sigma3}
//   = (1/2) e^{-i pi/4 sigma3} [[1,1],[-1,1]] diag(1, 1-2 alpha)
inline Matrix2 phi0_regularized_limit(Complex alpha) {
    Matrix2 rot = Matrix2::diag(std::exp(-kI * kPi / 4.0), std::exp(kI * kPi / 4.0));
    Matrix2 hadamard{1.0, 1.0, -1.0, 1.0};
    return 0.5 * (rot * hadamard * Matrix2::diag(1.0, 1.0 - 2.0 * alpha));
}

// Sector functions: phi^1 = phi0 E^, phi^2 = phi^1 S1^, phi^3 = phi^2 S2^,
// each evaluated on the sheet carried by its sector window.
inline Matrix2 phi_sector(int k, Complex z, Complex alpha, SeriesPolicy pol = {}) {
    ArgWindow w = sector_window(k);
    ParametrixMatrices m = parametrix_matrices(alpha);
    Matrix2 out = phi0(z, alpha, w, pol) * m.E_hat;
    if (k >= 2) out = out * m.S1_hat;
    if (k >= 3) out = out * m.S2_hat;
    return out;
}

// Residual of the first-order large-argument expansion
//   phi^k(z) = (I - (i alpha sigma1 + alpha^2 sigma3)/(2z) + O(1/z^2)) e^{z sigma3},
// expected O(z^-2). The sigma3 part of the 1/z term has coefficient
// -alpha^2/2 (verified to 50 digits); without it the residual only decays
// at first order. Meaningful where the two exponentials stay comparable
// (near-imaginary directions); the magnitude guard keeps e^{+-z}
// representable.
inline double large_z_expansion_residual(int k, Complex z, Complex alpha,
                                         SeriesPolicy pol = {}) {
    double az = std::abs(z);
    if (az < 10.0 || az > 40.0)
        throw domain_error("large_z_expansion_residual: requires 10 <= |z| <= 40");
    Matrix2 lhs = phi_sector(k, z, alpha, pol) * sigma3_exp(-z);
    Matrix2 corr =
        (kI * alpha / (2.0 * z)) * sigma1() + (alpha * alpha / (2.0 * z)) * sigma3();
    Matrix2 r = lhs - Matrix2::identity() + corr;
    return r.frobenius_norm();
}

}  // namespace pii
