#pragma once

// Phase functions and steepest-descent geometry: the cubic phase theta, its
// scaled form, the conformal maps z(lambda), eta, zeta, stationary points,
// and the descent curves.

#include <cmath>
#include <complex>

#include "pii/complex_matrix.hpp"
#include "pii/errors.hpp"

namespace pii {

// Geometry attached to one value of the independent variable x.
struct PhaseContext {
    double x;
    double t;                    // (-x)^{3/2} for x < 0, else 0
    Complex lambda_plus;         // +(i/2) sqrt(x) for x > 0
    Complex lambda_minus;
    double z_plus = 0.5;         // stationary points of the scaled phase
    double z_minus = -0.5;
    double big_r = 0.0;          // injectivity radius x^{1/2}/4 of z(lambda), x > 0

    static PhaseContext from_x(double x) {
        if (x == 0.0) throw domain_error("PhaseContext: x = 0 has no scaled phase");
        PhaseContext c{};
        c.x = x;
        c.t = x < 0 ? std::pow(-x, 1.5) : 0.0;
        if (x > 0) {
            double s = 0.5 * std::sqrt(x);
            c.lambda_plus = Complex(0.0, s);
            c.lambda_minus = Complex(0.0, -s);
            c.big_r = 0.25 * std::sqrt(x);
        }
        return c;
    }
};

// theta(lambda, x) = i (4 lambda^3 / 3 + x lambda)
inline Complex theta(Complex lambda, double x) {
    return kI * (4.0 / 3.0 * lambda * lambda * lambda + x * lambda);
}

// theta~(z) = i (4 z^3 / 3 - z); satisfies theta(sqrt(-x) z, x) = (-x)^{3/2} theta~(z)
inline Complex theta_tilde(Complex z) {
    return kI * (4.0 / 3.0 * z * z * z - z);
}

// z(lambda) = -theta(lambda) for x > 0; injective on |lambda| < x^{1/2}/4.
inline Complex z_map(Complex lambda, double x) {
    if (x <= 0.0) throw domain_error("z_map: requires x > 0");
    return -kI * (4.0 / 3.0 * lambda * lambda * lambda + x * lambda);
}

inline Complex z_map_derivative(Complex lambda, double x) {
    return -kI * (4.0 * lambda * lambda + x);
}

// Newton inversion of z_map, seeded from the linearisation z ~ -i x lambda.
inline Complex z_map_inverse(Complex target, double x) {
    if (x <= 0.0) throw domain_error("z_map_inverse: requires x > 0");
    const double big_r = 0.25 * std::sqrt(x);
    Complex lambda = target / Complex(0.0, -x);
    for (int it = 0; it < 50; ++it) {
        Complex f = z_map(lambda, x) - target;
        if (std::abs(f) <= 1e-13 * (1.0 + std::abs(target))) {
            if (std::abs(lambda) >= big_r)
                throw domain_error("z_map_inverse: root outside the injectivity ball");
            return lambda;
        }
        lambda -= f / z_map_derivative(lambda, x);
        if (std::abs(lambda) > 4.0 * big_r)
            throw domain_error("z_map_inverse: iteration left the injectivity ball");
    }
    throw convergence_error("z_map_inverse: Newton did not converge in 50 iterations");
}

// eta(z) = i theta~(z) = z - 4 z^3 / 3
inline Complex eta(Complex z) {
    return z - 4.0 / 3.0 * z * z * z;
}

// zeta(z) = 4 sqrt(3) e^{3 pi i/4} (z - 1/2)(z + 1)^{1/2} / 3, principal
// branch of the square root; satisfies zeta^2 = 4(theta~(1/2) - theta~(z)).
inline Complex zeta(Complex z) {
    if (z == Complex(-1.0, 0.0))
        throw branch_cut_error("zeta: z = -1 is the branch point");
    Complex root = branched_power(z + 1.0, 0.5, principal_window);
    Complex pre = 4.0 * std::sqrt(3.0) / 3.0 * std::exp(kI * (3.0 * kPi / 4.0));
    return pre * (z - 0.5) * root;
}

struct DescentCurves {
    Complex gamma_plus;
    Complex gamma_minus;
    Complex h_plus;
    Complex h_minus;
};

// gamma_pm(t) = t +- i (t^2/3 + x/4)^{1/2} (x > 0) and the scaled curves
// h_pm(t) = i t +- (t^2/3 + 1/4)^{1/2}.
inline DescentCurves descent_curves(double t_param, double x) {
    if (x <= 0.0) throw domain_error("descent_curves: requires x > 0");
    double g = std::sqrt(t_param * t_param / 3.0 + 0.25 * x);
    double h = std::sqrt(t_param * t_param / 3.0 + 0.25);
    return {Complex(t_param, g), Complex(t_param, -g),
            Complex(h, t_param), Complex(-h, t_param)};
}

}  // namespace pii
