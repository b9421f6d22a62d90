#pragma once

// Fixed-shape 2x2 complex linear algebra: Pauli matrices, products,
// determinants, diagonal exponentials, and branched scalar/matrix powers
// with explicit 2*pi argument windows.

#include <cmath>
#include <complex>
#include <limits>

#include "pii/errors.hpp"

namespace pii {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr Complex kI{0.0, 1.0};

// A half-open 2*pi-wide window (lo, hi) selecting one sheet of arg z.
struct ArgWindow {
    double lo;
    double hi;
};

inline constexpr ArgWindow principal_window{-kPi, kPi};
inline constexpr ArgWindow upper_window{-kPi / 2, 3 * kPi / 2};
inline constexpr ArgWindow lower_window{-3 * kPi / 2, kPi / 2};

// Inputs closer than this to a window boundary are rejected instead of
// rounded; the downstream identities are branch-sensitive.
inline constexpr double kBranchBoundaryTol = 1e-12;

// Unique representative of arg z strictly inside the window w.
inline double arg_in_window(Complex z, ArgWindow w) {
    double a = std::arg(z);  // (-pi, pi]
    while (a <= w.lo) a += 2 * kPi;
    while (a > w.hi) a -= 2 * kPi;
    if (a - w.lo < kBranchBoundaryTol || w.hi - a < kBranchBoundaryTol)
        throw branch_cut_error("argument lies on a branch-cut boundary of the window");
    return a;
}

// exp(a * log z) on the sheet selected by w.
inline Complex branched_power(Complex z, Complex a, ArgWindow w) {
    if (z == Complex(0.0, 0.0)) {
        if (a.real() > 0.0) return {0.0, 0.0};
        throw singular_input_error("branched_power: z = 0 with Re a <= 0");
    }
    Complex logz(std::log(std::abs(z)), arg_in_window(z, w));
    return std::exp(a * logz);
}

struct Matrix2 {
    Complex a11{0.0, 0.0}, a12{0.0, 0.0}, a21{0.0, 0.0}, a22{0.0, 0.0};

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2 diag(Complex d1, Complex d2) { return {d1, 0.0, 0.0, d2}; }

    Complex det() const { return a11 * a22 - a12 * a21; }

    double frobenius_norm() const {
        return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22));
    }

    Matrix2 inverse() const {
        Complex d = det();
        if (std::abs(d) == 0.0)
            throw singular_input_error("Matrix2::inverse: singular matrix");
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }

    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
    friend Matrix2 operator*(Complex s, const Matrix2& m) {
        return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
    }
    friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
        return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
    }
    friend Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
        return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
    }
};

inline Matrix2 mat_mul(const Matrix2& a, const Matrix2& b) { return a * b; }

inline Matrix2 sigma1() { return {0.0, 1.0, 1.0, 0.0}; }
inline Matrix2 sigma2() { return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}; }
inline Matrix2 sigma3() { return {1.0, 0.0, 0.0, -1.0}; }

// diag(e^c, e^-c); unit determinant by construction.
inline Matrix2 sigma3_exp(Complex c) {
    if (std::abs(c.real()) > 700.0)
        throw range_overflow_error("sigma3_exp: |Re c| exceeds representable range");
    return Matrix2::diag(std::exp(c), std::exp(-c));
}

// diag(z^a, z^-a) with both entries on the same branch of log z.
inline Matrix2 sigma3_power(Complex z, Complex a, ArgWindow w) {
    if (z == Complex(0.0, 0.0))
        throw singular_input_error("sigma3_power: z = 0");
    Complex logz(std::log(std::abs(z)), arg_in_window(z, w));
    Complex e = a * logz;
    if (std::abs(e.real()) > 700.0)
        throw range_overflow_error("sigma3_power: exponent overflow");
    return Matrix2::diag(std::exp(e), std::exp(-e));
}

// exp(-v sigma2) in closed form; sigma2^2 = I collapses the exponential to
// [[cosh v, i sinh v], [-i sinh v, cosh v]].
inline Matrix2 transport_matrix(Complex v) {
    if (std::abs(v.real()) > 700.0)
        throw range_overflow_error("transport_matrix: |Re v| exceeds representable range");
    Complex ch = std::cosh(v), sh = std::sinh(v);
    return {ch, kI * sh, -kI * sh, ch};
}

}  // namespace pii
