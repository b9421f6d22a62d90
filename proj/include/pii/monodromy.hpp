#pragma once

// Stokes/monodromy data of the Ablowitz-Segur family and the explicit
// connection algebra: the matrices E, M, D, K, N, S_D, H, the exponent nu,
// and the predicted total-integral values.

#include <cmath>
#include <complex>

#include "pii/bessel_parametrix.hpp"
#include "pii/complex_matrix.hpp"
#include "pii/errors.hpp"
#include "pii/special_functions.hpp"

namespace pii {

enum class Family { RealAS, ImaginaryAS, HMBoundary, Other };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::RealAS: return "real";
        case Family::ImaginaryAS: return "imaginary";
        case Family::HMBoundary: return "hm-boundary";
        default: return "other";
    }
}

// Tolerance for detecting the Hastings-McLeod boundary |k| = cos(pi alpha);
// the predicted formulas genuinely diverge there and must be refused.
inline constexpr double kHmBoundaryTol = 1e-12;

inline Family classify_family(Complex alpha, Complex k) {
    bool both_real = alpha.imag() == 0.0 && k.imag() == 0.0;
    if (both_real && std::abs(alpha.real()) < 0.5) {
        double ca = std::cos(kPi * alpha.real());
        if (std::abs(std::abs(k.real()) - ca) <= kHmBoundaryTol) return Family::HMBoundary;
        if (std::abs(k.real()) < ca) return Family::RealAS;
    }
    if (alpha.real() == 0.0 && k.real() == 0.0) return Family::ImaginaryAS;
    return Family::Other;
}

struct ASParameters {
    Complex alpha;
    Complex k;
    Family family;

    ASParameters(Complex a, Complex kk) : alpha(a), k(kk), family(classify_family(a, kk)) {}
};

struct StokesTriple {
    Complex s1, s2, s3;
};

// s1 = -sin(pi alpha) - i k, s2 = 0, s3 = -sin(pi alpha) + i k
inline StokesTriple stokes_from_ak(Complex alpha, Complex k) {
    Complex sa = std::sin(kPi * alpha);
    return {-sa - kI * k, 0.0, -sa + kI * k};
}

inline double constraint_residual(const StokesTriple& s, Complex alpha) {
    return std::abs(s.s1 - s.s2 + s.s3 + s.s1 * s.s2 * s.s3 + 2.0 * std::sin(kPi * alpha));
}

// Triangular Stokes matrices: lower for odd index, upper for even.
inline Matrix2 stokes_matrix_lower(Complex s) { return {1.0, 0.0, s, 1.0}; }
inline Matrix2 stokes_matrix_upper(Complex s) { return {1.0, s, 0.0, 1.0}; }

// E = diag(p, q) [[1, i e^{-i pi alpha}], [1, -i e^{i pi alpha}]] with
// p = 1 and q = -(2 i cos(pi alpha))^{-1}; unimodular.
inline Matrix2 connection_E(Complex alpha) {
    Complex ca = std::cos(kPi * alpha);
    if (std::abs(ca) < 1e-12)
        throw singular_input_error("connection_E: cos(pi alpha) vanishes");
    Complex q = -1.0 / (2.0 * kI * ca);
    Complex eplus = std::exp(kI * kPi * alpha), eminus = std::exp(-kI * kPi * alpha);
    return {1.0, kI * eminus, q, -kI * q * eplus};
}

// M = -i e^{i pi (alpha - 1/2) sigma3} sigma2
inline Matrix2 matrix_M(Complex alpha) {
    Complex d = std::exp(kI * kPi * (alpha - 0.5));
    return Matrix2::diag(-kI * d, -kI / d) * sigma2();
}

// D = (sqrt(pi) e^{i pi/4} / cos(pi alpha)) *
//     diag(2^{-alpha} e^{-i pi alpha} / Gamma(1/2 + alpha),
//          -i 2^{alpha} cos(pi alpha) e^{i pi alpha} / Gamma(3/2 - alpha))
inline Matrix2 matrix_D(Complex alpha) {
    Complex ca = std::cos(kPi * alpha);
    if (std::abs(ca) < 1e-12)
        throw singular_input_error("matrix_D: cos(pi alpha) vanishes");
    Complex pre = std::sqrt(kPi) * std::exp(kI * kPi / 4.0) / ca;
    Complex two_a = std::exp(alpha * std::log(2.0));
    Complex d1 = std::exp(-kI * kPi * alpha) / (two_a * gamma_complex(alpha + 0.5));
    Complex d2 = -kI * two_a * ca * std::exp(kI * kPi * alpha) / gamma_complex(1.5 - alpha);
    return Matrix2::diag(pre * d1, pre * d2);
}

namespace detail {

inline Complex one_minus_s1s3(Complex alpha, Complex k) {
    Complex ca = std::cos(kPi * alpha);
    return ca * ca - k * k;
}

inline void require_off_log_cut(Complex c, const char* who) {
    if (c.imag() == 0.0 && c.real() <= 0.0)
        throw branch_cut_error(std::string(who) + ": 1 - s1 s3 lies on the log/sqrt cut");
}

}  // namespace detail

// K as assembled from its definition: (1-s1 s3)^{-1/2} E S2^ [[1,-s3],[-s1,1]] E^{-1}
inline Matrix2 matrix_K_definition(Complex alpha, Complex k) {
    StokesTriple s = stokes_from_ak(alpha, k);
    Complex c = 1.0 - s.s1 * s.s3;
    detail::require_off_log_cut(c, "matrix_K_definition");
    Matrix2 e = connection_E(alpha);
    Matrix2 mid{1.0, -s.s3, -s.s1, 1.0};
    Matrix2 s2h = parametrix_matrices(alpha).S2_hat;
    return (1.0 / std::sqrt(c)) * (e * s2h * mid * e.inverse());
}

// Closed diagonal form: (1-s1 s3)^{-1/2} diag(cos - k, cos + k) e^{-i pi alpha sigma3}
inline Matrix2 matrix_K_closed(Complex alpha, Complex k) {
    Complex c = detail::one_minus_s1s3(alpha, k);
    if (std::abs(c) < 1e-12)
        throw singular_input_error("matrix_K_closed: normalisation vanishes at the HM boundary");
    detail::require_off_log_cut(c, "matrix_K_closed");
    Complex ca = std::cos(kPi * alpha);
    Complex e = std::exp(-kI * kPi * alpha);
    return (1.0 / std::sqrt(c)) * Matrix2::diag((ca - k) * e, (ca + k) / e);
}

// nu = -(2 pi i)^{-1} log(1 - s1 s3), principal branch; purely imaginary on
// both AS families.
inline Complex nu_constant(Complex alpha, Complex k) {
    StokesTriple s = stokes_from_ak(alpha, k);
    Complex c = 1.0 - s.s1 * s.s3;
    detail::require_off_log_cut(c, "nu_constant");
    return -std::log(c) / (2.0 * kPi * kI);
}

// S_D = (1 - s1 s3)^{sigma3}
inline Matrix2 segment_jump_matrix(Complex alpha, Complex k) {
    StokesTriple s = stokes_from_ak(alpha, k);
    Complex c = 1.0 - s.s1 * s.s3;
    return Matrix2::diag(c, 1.0 / c);
}

// N(z) = ((z + 1/2)/(z - 1/2))^{nu sigma3} with arg(z +- 1/2) in (-pi, pi);
// analytic off the segment [-1/2, 1/2], tends to I at infinity.
inline Matrix2 model_N(Complex z, Complex alpha, Complex k) {
    if (std::abs(z.imag()) < 1e-13 && z.real() >= -0.5 - 1e-13 && z.real() <= 0.5 + 1e-13)
        throw branch_cut_error("model_N: z on the segment [-1/2, 1/2]");
    Complex nu = nu_constant(alpha, k);
    Complex w = std::log(z + 0.5) - std::log(z - 0.5);  // principal logs
    return Matrix2::diag(std::exp(nu * w), std::exp(-nu * w));
}

struct ModelData {
    Complex nu;
    double z_minus = -0.5;
    double z_plus = 0.5;
    Matrix2 S_D;
};

inline ModelData model_data(Complex alpha, Complex k) {
    return {nu_constant(alpha, k), -0.5, 0.5, segment_jump_matrix(alpha, k)};
}

namespace detail {

inline void require_integral_family(Complex alpha, Complex k, bool allow_imaginary,
                                    const char* who) {
    Family f = classify_family(alpha, k);
    if (f == Family::HMBoundary)
        throw unsupported_family_error(std::string(who) +
                                       ": formula diverges on the HM boundary");
    if (f == Family::RealAS) return;
    if (f == Family::ImaginaryAS && (allow_imaginary || alpha == Complex(0.0, 0.0))) return;
    throw unsupported_family_error(std::string(who) + ": parameters outside the supported family");
}

}  // namespace detail

// (1/2) log((cos(pi alpha) + k)/(cos(pi alpha) - k)); real on the real family.
inline Complex predicted_total_integral(Complex alpha, Complex k) {
    detail::require_integral_family(alpha, k, false, "predicted_total_integral");
    Complex ca = std::cos(kPi * alpha);
    return 0.5 * std::log((ca + k) / (ca - k));
}

// (cos(pi alpha) + k)/(cos^2(pi alpha) - k^2)^{1/2}; unit modulus on the
// purely imaginary family.
inline Complex predicted_exp_total(Complex alpha, Complex k) {
    detail::require_integral_family(alpha, k, true, "predicted_exp_total");
    Complex ca = std::cos(kPi * alpha);
    return (ca + k) / std::sqrt(ca * ca - k * k);
}

struct LimitMatrixData {
    Matrix2 H;
    Complex h_plus;
    Complex h_minus;
};

// h_pm = (1 - s1 s3)^{-1/2} (cos(pi alpha) -+ k)/2 and the limit matrix
// H = [[h+ + h-, i(h+ - h-)], [i(h- - h+), h+ + h-]]; 2 h- equals the
// predicted exponential total.
inline LimitMatrixData matrix_H_and_limit(Complex alpha, Complex k) {
    Complex c = detail::one_minus_s1s3(alpha, k);
    if (std::abs(c) < 1e-12)
        throw singular_input_error("matrix_H_and_limit: normalisation vanishes at the HM boundary");
    detail::require_off_log_cut(c, "matrix_H_and_limit");
    Complex ca = std::cos(kPi * alpha);
    Complex inv_sqrt = 1.0 / std::sqrt(c);
    Complex hp = inv_sqrt * (ca - k) * 0.5;
    Complex hm = inv_sqrt * (ca + k) * 0.5;
    Matrix2 h{hp + hm, kI * (hp - hm), kI * (hm - hp), hp + hm};
    return {h, hp, hm};
}

}  // namespace pii
