#pragma once

// Scalar special functions used by the rest of the library: complex Gamma,
// real Airy Ai / Ai', and the Bessel-type series pair v1, v2 with
// derivatives.

#include <array>
#include <cmath>
#include <complex>

#include "pii/complex_matrix.hpp"
#include "pii/errors.hpp"

namespace pii {

struct SeriesPolicy {
    double target_rel_error = 1e-13;
    int max_terms = 200;
};

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------

namespace detail {

// Lanczos (g = 7, n = 9) rational approximation, valid for Re z >= 0.5.
inline Complex gamma_lanczos(Complex z) {
    static constexpr std::array<double, 9> c = {
        0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
        771.32342877765313,    -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};
    z -= 1.0;
    Complex x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    Complex t = z + 7.5;
    return std::sqrt(2 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace detail

inline Complex gamma_complex(Complex z) {
    if (z.imag() == 0.0 && z.real() <= 0.5) {
        double r = std::round(z.real());
        if (r <= 0.0 && std::abs(z.real() - r) < 1e-10)
            throw pole_error("gamma_complex: argument within 1e-10 of a pole", z.real());
    }
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        Complex s = std::sin(kPi * z);
        if (std::abs(s) < 1e-290)
            throw pole_error("gamma_complex: reflection hit a pole");
        return kPi / (s * detail::gamma_lanczos(1.0 - z));
    }
    return detail::gamma_lanczos(z);
}

// ---------------------------------------------------------------------------
// Airy Ai and Ai' on [-2, 60]
// ---------------------------------------------------------------------------

namespace detail {

// Maclaurin pair: Ai = c1 f - c2 g, Ai' = c1 f' - c2 g'.
inline void airy_maclaurin(double x, double& ai, double& aip) {
    constexpr double c1 = 0.35502805388781724;  // Ai(0)  = 3^(-2/3)/Gamma(2/3)
    constexpr double c2 = 0.25881940379280680;  // -Ai'(0) = 3^(-1/3)/Gamma(1/3)
    if (x == 0.0) {
        ai = c1;
        aip = -c2;
        return;
    }
    double x3 = x * x * x;
    double f = 1.0, fp = 0.0, g = x, gp = 1.0;
    double tf = 1.0, tg = x;
    for (int k = 1; k < 80; ++k) {
        tf *= x3 / ((3 * k - 1) * (3.0 * k));
        tg *= x3 / ((3.0 * k) * (3 * k + 1));
        f += tf;
        g += tg;
        fp += 3 * k * tf / x;
        gp += (3 * k + 1) * tg / x;
        if (std::abs(tf) < 1e-17 * std::abs(f) && std::abs(tg) < 1e-17 * std::abs(g)) break;
    }
    ai = c1 * f - c2 * g;
    aip = c1 * fp - c2 * gp;
}

// K_nu(zeta) * e^{+zeta} by trapezoidal quadrature of the hyperbolic-cosine
// integral representation; the integrand's even extension makes the rule
// converge superalgebraically.
inline double bessel_k_scaled(double nu, double zeta) {
    const double T = std::acosh(1.0 + 44.0 / zeta);
    const double h = 1.0 / 16.0;
    double sum = 0.5;  // t = 0 term of e^{-zeta(cosh t - 1)} cosh(nu t)
    const int n = static_cast<int>(T / h) + 2;
    for (int j = 1; j <= n; ++j) {
        double t = j * h;
        sum += std::exp(-zeta * (std::cosh(t) - 1.0)) * std::cosh(nu * t);
    }
    return h * sum;
}

inline void airy_bessel_k(double x, double& ai, double& aip) {
    double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    double e = std::exp(-zeta);
    ai = std::sqrt(x / 3.0) / kPi * e * bessel_k_scaled(1.0 / 3.0, zeta);
    aip = -(x / std::sqrt(3.0)) / kPi * e * bessel_k_scaled(2.0 / 3.0, zeta);
}

// Large-x expansion, truncated at the smallest term.
inline void airy_asymptotic(double x, double& ai, double& aip) {
    double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    double u = 1.0, su = 1.0, sv = 1.0, sign = 1.0;
    for (int k = 0; k < 60; ++k) {
        double unext = u * (6 * k + 1) * (6 * k + 3) * (6 * k + 5) /
                       (216.0 * (k + 1) * (2 * k + 1));
        double term = unext / std::pow(zeta, k + 1);
        if (term > u / std::pow(zeta, static_cast<double>(k))) break;  // divergence onset
        sign = -sign;
        su += sign * term;
        sv += sign * term * (-(6.0 * (k + 1) + 1) / (6.0 * (k + 1) - 1));
        u = unext;
        if (term < 1e-18 * std::abs(su)) break;
    }
    double pre = std::exp(-zeta) / (2.0 * std::sqrt(kPi));
    ai = pre / std::pow(x, 0.25) * su;
    aip = -pre * std::pow(x, 0.25) * sv;
}

inline void airy_pair(double x, double& ai, double& aip) {
    if (x < -2.0 || x > 60.0)
        throw domain_error("airy_ai: argument outside [-2, 60]");
    if (x <= 1.5)
        airy_maclaurin(x, ai, aip);
    else if (x < 9.0)
        airy_bessel_k(x, ai, aip);
    else
        airy_asymptotic(x, ai, aip);
}

}  // namespace detail

inline double airy_ai(double x) {
    double a, ap;
    detail::airy_pair(x, a, ap);
    return a;
}

inline double airy_ai_prime(double x) {
    double a, ap;
    detail::airy_pair(x, a, ap);
    return ap;
}

// ---------------------------------------------------------------------------
// The series pair v1, v2
//
//   v1(z) = z^alpha     * sum_k c_k z^{2k},  c_0 = 1
//   v2(z) = z^{1-alpha} * sum_k d_k z^{2k},  d_0 = 1
//
// The branched prefactor z^{+-alpha} is delegated to branched_power so the
// sector bookkeeping has a single source of truth.
// ---------------------------------------------------------------------------

namespace detail {

// Sums S = sum c_k z^{2k} and Sw = sum (e0 + 2k) c_k z^{2k} where
// c_k = c_{k-1} * z^2 / (4k (k + shift)). Templated on the scalar: the
// entire part cancels down from terms of size e^{|z|}, so beyond |z| ~ 22
// the accumulation runs in quad precision.
template <class Real>
inline bool v_series_impl(Complex zq, Complex shiftq, Complex e0q, const SeriesPolicy& pol,
                          Complex& s_out, Complex& sw_out) {
    using C = std::complex<Real>;
    const C z2 = C(zq.real(), zq.imag()) * C(zq.real(), zq.imag());
    const C shift(shiftq.real(), shiftq.imag());
    const C e0(e0q.real(), e0q.imag());
    C t(Real(1), Real(0));
    C s = t;
    C sw = e0;
    auto mag = [](const C& v) {
        return std::abs(static_cast<double>(v.real())) +
               std::abs(static_cast<double>(v.imag()));
    };
    int small_run = 0;
    for (int k = 1; k <= pol.max_terms; ++k) {
        C den = Real(4 * k) * (Real(k) + shift);
        if (mag(den) < 1e-12)
            throw singular_input_error("v series: coefficient denominator vanishes");
        t *= z2 / den;
        s += t;
        sw += (e0 + C(Real(2 * k), Real(0))) * t;
        if (mag(t) <= pol.target_rel_error * mag(s)) {
            if (++small_run >= 2) {
                s_out = Complex(static_cast<double>(s.real()), static_cast<double>(s.imag()));
                sw_out =
                    Complex(static_cast<double>(sw.real()), static_cast<double>(sw.imag()));
                return true;
            }
        } else {
            small_run = 0;
        }
    }
    return false;
}

inline void v_series(Complex z, Complex shift, Complex e0, const SeriesPolicy& pol,
                     Complex& s, Complex& sw) {
    bool converged;
#if defined(__SIZEOF_FLOAT128__)
    if (std::abs(z) > 22.0)
        converged = v_series_impl<__float128>(z, shift, e0, pol, s, sw);
    else
#endif
        converged = v_series_impl<double>(z, shift, e0, pol, s, sw);
    if (!converged) throw convergence_error("v series: not converged within max_terms");
}

}  // namespace detail

inline Complex v1(Complex z, Complex alpha, ArgWindow w, SeriesPolicy pol = {}) {
    Complex s, sw;
    detail::v_series(z, alpha - 0.5, alpha, pol, s, sw);
    return branched_power(z, alpha, w) * s;
}

inline Complex v1_prime(Complex z, Complex alpha, ArgWindow w, SeriesPolicy pol = {}) {
    if (z == Complex(0.0, 0.0))
        throw singular_input_error("v1_prime: z = 0");
    Complex s, sw;
    detail::v_series(z, alpha - 0.5, alpha, pol, s, sw);
    return branched_power(z, alpha, w) * sw / z;
}

inline Complex v2(Complex z, Complex alpha, ArgWindow w, SeriesPolicy pol = {}) {
    Complex s, sw;
    detail::v_series(z, 0.5 - alpha, 1.0 - alpha, pol, s, sw);
    return branched_power(z, -alpha, w) * z * s;
}

inline Complex v2_prime(Complex z, Complex alpha, ArgWindow w, SeriesPolicy pol = {}) {
    if (z == Complex(0.0, 0.0))
        throw singular_input_error("v2_prime: z = 0");
    Complex s, sw;
    detail::v_series(z, 0.5 - alpha, 1.0 - alpha, pol, s, sw);
    return branched_power(z, -alpha, w) * sw;
}

}  // namespace pii
