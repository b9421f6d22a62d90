#pragma once

// Machine-checkable residual suite for the explicit connection and
// parametrix algebra. Each check evaluates one named identity over a
// parameter grid and reports the worst residual against its tolerance.

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pii/bessel_parametrix.hpp"
#include "pii/complex_matrix.hpp"
#include "pii/monodromy.hpp"
#include "pii/special_functions.hpp"

namespace pii {

struct IdentityReport {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

enum class GridKind { Minimal, Default, Dense };

inline std::optional<GridKind> parse_grid_kind(const std::string& s) {
    if (s == "minimal") return GridKind::Minimal;
    if (s == "default") return GridKind::Default;
    if (s == "dense") return GridKind::Dense;
    return std::nullopt;
}

namespace detail {

struct IdentityGrid {
    std::vector<Complex> alphas_all;             // generic alpha grid
    std::vector<std::pair<Complex, Complex>> ak; // admissible (alpha, k) pairs
    std::vector<Complex> zs;                     // sample points off the cuts
};

inline IdentityGrid identity_grid(GridKind kind) {
    IdentityGrid g;
    if (kind == GridKind::Minimal) {
        g.alphas_all = {0.0};
        g.ak = {{0.0, 0.5}, {0.0, Complex(0.0, 0.5)}};
        g.zs = {Complex(0.9, 0.3), Complex(-0.4, 0.8)};
        return g;
    }
    g.alphas_all = {0.0,  0.25, -0.25, 0.4, -0.4, Complex(0.0, 0.2), Complex(0.0, 0.5)};
    for (Complex a : {0.0, 0.25, -0.25, 0.4}) {
        double c = std::cos(kPi * a.real());
        g.ak.emplace_back(a, 0.4 * c);
        g.ak.emplace_back(a, -0.7 * c);
    }
    g.ak.emplace_back(Complex(0.0, 0.3), Complex(0.0, 0.4));
    g.ak.emplace_back(Complex(0.0, 0.1), Complex(0.0, -0.7));
    g.zs = {Complex(0.9, 0.3), Complex(-0.4, 0.8), Complex(1.4, -0.5), Complex(0.2, 1.1)};
    if (kind == GridKind::Dense) {
        for (Complex a : {0.1, -0.1, 0.45, -0.45}) {
            double c = std::cos(kPi * a.real());
            g.alphas_all.push_back(a);
            g.ak.emplace_back(a, 0.5 * c);
        }
        g.alphas_all.push_back(Complex(0.0, 0.35));
        g.ak.emplace_back(Complex(0.0, 0.35), Complex(0.0, 0.8));
        g.zs.push_back(Complex(-1.2, -0.7));
        g.zs.push_back(Complex(0.6, -0.9));
    }
    return g;
}

inline IdentityReport make_report(std::string name, double residual, double tol) {
    return {std::move(name), residual, tol, residual <= tol};
}

// E S1 S2 S3 = sigma2 M^{-1} E sigma2 with S2 = I for this family.
inline IdentityReport check_connection_relation(const IdentityGrid& g) {
    double worst = 0.0;
    for (auto [a, k] : g.ak) {
        StokesTriple s = stokes_from_ak(a, k);
        Matrix2 e = connection_E(a);
        Matrix2 lhs = e * stokes_matrix_lower(s.s1) * stokes_matrix_upper(s.s2) *
                      stokes_matrix_lower(s.s3);
        Matrix2 rhs = sigma2() * matrix_M(a).inverse() * e * sigma2();
        worst = std::max(worst, (lhs - rhs).frobenius_norm());
    }
    return make_report("connection-relation", worst, 1e-12);
}

// sigma2 phi^{k+1}(e^{i pi} z) sigma2 = phi^k(z), k = 1, 2.
inline IdentityReport check_sector_rotation(const IdentityGrid& g) {
    double worst = 0.0;
    std::vector<Complex> alphas = {0.0, 0.25, Complex(0.0, 0.2)};
    for (Complex a : alphas) {
        for (Complex z : g.zs) {
            for (int k = 1; k <= 2; ++k) {
                Matrix2 lhs = sigma2() * phi_sector(k + 1, -z, a) * sigma2();
                Matrix2 rhs = phi_sector(k, z, a);
                worst = std::max(worst, (lhs - rhs).frobenius_norm());
            }
        }
    }
    return make_report("sector-rotation", worst, 1e-10);
}

// E^ S1^ = D E
inline IdentityReport check_connection_bridge(const IdentityGrid& g) {
    double worst = 0.0;
    for (Complex a : g.alphas_all) {
        ParametrixMatrices m = parametrix_matrices(a);
        Matrix2 lhs = m.E_hat * m.S1_hat;
        Matrix2 rhs = matrix_D(a) * connection_E(a);
        worst = std::max(worst, (lhs - rhs).frobenius_norm());
    }
    return make_report("connection-bridge", worst, 1e-12);
}

// lim_{z->0} phi0(z) z^{-alpha sigma3} against the closed form, by
// polynomial extrapolation from z = 1e-3, 1e-4, 1e-5.
inline IdentityReport check_origin_limit(const IdentityGrid& g) {
    double worst = 0.0;
    for (Complex a : g.alphas_all) {
        const double zs[3] = {1e-3, 1e-4, 1e-5};
        Matrix2 f[3];
        for (int i = 0; i < 3; ++i)
            f[i] = phi0(zs[i], a, principal_window) *
                   sigma3_power(zs[i], -a, principal_window);
        Matrix2 ext{0.0, 0.0, 0.0, 0.0};
        for (int i = 0; i < 3; ++i) {
            double li = 1.0;
            for (int j = 0; j < 3; ++j)
                if (j != i) li *= (0.0 - zs[j]) / (zs[i] - zs[j]);
            ext = ext + Complex(li, 0.0) * f[i];
        }
        worst = std::max(worst, (ext - phi0_regularized_limit(a)).frobenius_norm());
    }
    return make_report("origin-limit", worst, 1e-8);
}

// v1 v2' - v2 v1' = 1 - 2 alpha, z-independent.
inline IdentityReport check_wronskian(const IdentityGrid& g) {
    double worst = 0.0;
    std::vector<Complex> zpts = {0.3, 1.0, Complex(2.0, 1.0)};
    for (Complex a : g.alphas_all) {
        for (Complex z : zpts) {
            Complex w = v1(z, a, principal_window) * v2_prime(z, a, principal_window) -
                        v2(z, a, principal_window) * v1_prime(z, a, principal_window);
            Complex expect = 1.0 - 2.0 * a;
            worst = std::max(worst, std::abs(w - expect) / (1.0 + std::abs(expect)));
        }
    }
    return make_report("wronskian", worst, 1e-10);
}

// K from its definition against the closed diagonal form, plus the
// off-diagonal decay of the assembled K.
inline IdentityReport check_k_diagonalization(const IdentityGrid& g) {
    double worst = 0.0;
    for (auto [a, k] : g.ak) {
        Matrix2 kd = matrix_K_definition(a, k);
        Matrix2 kc = matrix_K_closed(a, k);
        worst = std::max(worst, (kd - kc).frobenius_norm());
        worst = std::max(worst, std::abs(kd.a12));
        worst = std::max(worst, std::abs(kd.a21));
    }
    return make_report("k-diagonalization", worst, 1e-12);
}

// S+ = [[1,0],[s1,1]][[1,0],[s3,1]] and S-^{-1} = [[1,-s1],[0,1]][[1,-s3],[0,1]].
inline IdentityReport check_jump_factorization(const IdentityGrid& g) {
    double worst = 0.0;
    for (auto [a, k] : g.ak) {
        StokesTriple s = stokes_from_ak(a, k);
        ParametrixMatrices m = parametrix_matrices(a);
        Matrix2 lower = stokes_matrix_lower(s.s1) * stokes_matrix_lower(s.s3);
        Matrix2 upper = stokes_matrix_upper(-s.s1) * stokes_matrix_upper(-s.s3);
        worst = std::max(worst, (m.S2_hat - lower).frobenius_norm());
        worst = std::max(worst, (m.S1_hat - upper).frobenius_norm());
    }
    return make_report("jump-factorization", worst, 1e-13);
}

// (1-s1 s3)^{sigma3/2} [[1, -s3/(1-s1 s3)],[0,1]] [[1,0],[-s1,1]]
//   = (1-s1 s3)^{-1/2} [[1,-s3],[-s1,1]]
inline IdentityReport check_triangular_collapse(const IdentityGrid& g) {
    double worst = 0.0;
    for (auto [a, k] : g.ak) {
        StokesTriple s = stokes_from_ak(a, k);
        Complex c = 1.0 - s.s1 * s.s3;
        Matrix2 lhs = Matrix2::diag(std::sqrt(c), 1.0 / std::sqrt(c)) *
                      stokes_matrix_upper(-s.s3 / c) * stokes_matrix_lower(-s.s1);
        Matrix2 rhs = (1.0 / std::sqrt(c)) * Matrix2{1.0, -s.s3, -s.s1, 1.0};
        worst = std::max(worst, (lhs - rhs).frobenius_norm());
    }
    return make_report("triangular-collapse", worst, 1e-13);
}

// 2 h- equals the predicted exponential total.
inline IdentityReport check_exp_total_consistency(const IdentityGrid& g) {
    double worst = 0.0;
    for (auto [a, k] : g.ak) {
        LimitMatrixData h = matrix_H_and_limit(a, k);
        worst = std::max(worst, std::abs(2.0 * h.h_minus - predicted_exp_total(a, k)));
    }
    return make_report("exp-total-consistency", worst, 1e-13);
}

// N_+(z0) N_-(z0)^{-1} -> S_D on the segment, first order in the offset;
// verified by Richardson extrapolation over eps = 1e-3, 1e-4, 1e-5.
inline IdentityReport check_segment_jump(const IdentityGrid& g) {
    double worst = 0.0;
    bool slopes_ok = true;
    for (auto [a, k] : g.ak) {
        Matrix2 sd = segment_jump_matrix(a, k);
        const double eps[3] = {1e-3, 1e-4, 1e-5};
        double r[3];
        Matrix2 f[3];
        for (int i = 0; i < 3; ++i) {
            Complex z0(0.1, 0.0);
            Matrix2 above = model_N(z0 + kI * eps[i], a, k);
            Matrix2 below = model_N(z0 - kI * eps[i], a, k);
            f[i] = above * below.inverse();
            r[i] = (f[i] - sd).frobenius_norm();
        }
        if (r[0] > 1e-14) {
            double s1 = std::log10(r[0] / std::max(r[1], 1e-300));
            double s2 = std::log10(r[1] / std::max(r[2], 1e-300));
            if (s1 < 0.7 || s1 > 1.3 || s2 < 0.7 || s2 > 1.3) slopes_ok = false;
        }
        Matrix2 ext{0.0, 0.0, 0.0, 0.0};
        for (int i = 0; i < 3; ++i) {
            double li = 1.0;
            for (int j = 0; j < 3; ++j)
                if (j != i) li *= (0.0 - eps[j]) / (eps[i] - eps[j]);
            ext = ext + Complex(li, 0.0) * f[i];
        }
        worst = std::max(worst, (ext - sd).frobenius_norm());
    }
    IdentityReport rep = make_report("segment-jump", worst, 1e-8);
    rep.pass = rep.pass && slopes_ok;
    return rep;
}

// Constraint residual of the family's Stokes data.
inline IdentityReport check_stokes_constraint(const IdentityGrid& g) {
    double worst = 0.0;
    for (auto [a, k] : g.ak) {
        double scale = 1.0 + std::abs(std::sin(kPi * a));
        worst = std::max(worst, constraint_residual(stokes_from_ak(a, k), a) / scale);
    }
    return make_report("stokes-constraint", worst, 1e-14);
}

}  // namespace detail

// The parametrix-only subset.
inline std::vector<IdentityReport> run_parametrix_suite(
    GridKind kind, std::optional<double> tol_override = std::nullopt) {
    detail::IdentityGrid g = detail::identity_grid(kind);
    std::vector<IdentityReport> out{
        detail::check_sector_rotation(g),
        detail::check_connection_bridge(g),
        detail::check_origin_limit(g),
        detail::check_wronskian(g),
    };
    if (tol_override) {
        for (auto& r : out) {
            r.tolerance = *tol_override;
            r.pass = r.max_residual <= r.tolerance;
        }
    }
    return out;
}

inline std::vector<IdentityReport> run_identity_suite(
    GridKind kind, std::optional<double> tol_override = std::nullopt) {
    detail::IdentityGrid g = detail::identity_grid(kind);
    std::vector<IdentityReport> out{
        detail::check_stokes_constraint(g),
        detail::check_connection_relation(g),
        detail::check_sector_rotation(g),
        detail::check_connection_bridge(g),
        detail::check_origin_limit(g),
        detail::check_wronskian(g),
        detail::check_k_diagonalization(g),
        detail::check_jump_factorization(g),
        detail::check_triangular_collapse(g),
        detail::check_exp_total_consistency(g),
        detail::check_segment_jump(g),
    };
    if (tol_override) {
        for (auto& r : out) {
            r.tolerance = *tol_override;
            r.pass = r.max_residual <= r.tolerance;
        }
    }
    return out;
}

}  // namespace pii
