#pragma once

// Evaluation of the symmetric total integral of a trajectory, period
// averaging of the oscillatory truncation remainder, an optional
// envelope-fit cross-check, and the remainder-decay slope measurement.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "pii/errors.hpp"
#include "pii/monodromy.hpp"
#include "pii/pii_solver.hpp"

namespace pii {

enum class TotalsMethod { RawTruncation, PeriodAveraged, TailFit };

inline const char* totals_method_name(TotalsMethod m) {
    switch (m) {
        case TotalsMethod::RawTruncation: return "raw-truncation";
        case TotalsMethod::PeriodAveraged: return "period-averaged";
        default: return "tail-fit";
    }
}

struct IntegralResult {
    double X = 0.0;
    Complex raw;
    Complex averaged;
    Complex predicted;
    double abs_error = 0.0;
    TotalsMethod method = TotalsMethod::PeriodAveraged;
};

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod(7,15) on the trajectory's dense output.
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr std::array<double, 8> kGk15Nodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr std::array<double, 8> kGk15Weights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> kGauss7Weights = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
inline Complex gk15_panel(F&& f, double a, double b, double& err) {
    double mid = 0.5 * (a + b), hl = 0.5 * (b - a);
    Complex fk = kGk15Weights[7] * f(mid);
    Complex fg = kGauss7Weights[3] * f(mid);
    for (int i = 0; i < 7; ++i) {
        Complex lo = f(mid - hl * kGk15Nodes[i]);
        Complex hi = f(mid + hl * kGk15Nodes[i]);
        fk += kGk15Weights[i] * (lo + hi);
        if (i % 2 == 1) fg += kGauss7Weights[i / 2] * (lo + hi);
    }
    Complex result = hl * fk;
    err = std::abs(hl) * std::pow(200.0 * std::abs(fk - fg), 1.5);
    err = std::min(err, std::abs(hl * (fk - fg)) * 200.0);
    return result;
}

template <class F>
inline Complex adaptive_quadrature(F&& f, double a, double b, double abs_tol) {
    struct Span {
        double a, b;
    };
    std::vector<Span> stack{{a, b}};
    Complex total = 0.0;
    const double full = std::abs(b - a);
    int panels = 0;
    while (!stack.empty()) {
        Span s = stack.back();
        stack.pop_back();
        if (++panels > 2000000)
            throw convergence_error("adaptive_quadrature: panel budget exhausted");
        double err = 0.0;
        Complex v = gk15_panel(f, s.a, s.b, err);
        double local_tol = abs_tol * std::max(std::abs(s.b - s.a) / full, 1e-12);
        if (err <= local_tol || std::abs(s.b - s.a) < 1e-12) {
            total += v;
        } else {
            double m = 0.5 * (s.a + s.b);
            stack.push_back({s.a, m});
            stack.push_back({m, s.b});
        }
    }
    return total;
}

}  // namespace detail

// Integral of u over [-X, X]. The trajectory covers [x_min, anchor]; the
// stretch beyond the anchor is the analytic background tail (the residual
// recessive part there is below 1e-13 and is dropped).
inline Complex symmetric_integral(const Trajectory& traj, double X) {
    if (X <= 0.0) throw domain_error("symmetric_integral: X must be positive");
    if (-X < traj.x_min() - 1e-9)
        throw coverage_error("symmetric_integral: trajectory does not reach -X");
    double hi = std::min(X, traj.x_max());
    Complex v = detail::adaptive_quadrature([&](double t) { return traj.value(t); }, -X,
                                            hi, 1e-9);
    if (X > traj.x_max()) v += traj.background_integral(traj.x_max(), X);
    return v;
}

namespace detail {

// Truncation radii advancing the leading oscillation phase (2/3) X^{3/2}
// by uniform fractions of 2 pi beyond X_base.
inline std::vector<double> phase_spaced_radii(double X_base, int n) {
    double phi0 = 2.0 / 3.0 * std::pow(X_base, 1.5);
    std::vector<double> xs(n);
    for (int j = 0; j < n; ++j)
        xs[j] = std::pow(1.5 * (phi0 + 2.0 * kPi * j / n), 2.0 / 3.0);
    return xs;
}

inline Complex predicted_for(const ASParameters& p) {
    if (p.family == Family::RealAS) return predicted_total_integral(p.alpha, p.k);
    return std::log(predicted_exp_total(p.alpha, p.k));  // unit modulus: i arg
}

}  // namespace detail

inline IntegralResult period_averaged_total(const PIIProblem& problem, double X_base,
                                            int n_samples, const SolverConfig& cfg = {}) {
    if (X_base < 40.0) throw domain_error("period_averaged_total: X_base must be >= 40");
    if (n_samples < 4) throw domain_error("period_averaged_total: n_samples must be >= 4");
    std::vector<double> radii = detail::phase_spaced_radii(X_base, n_samples);
    double X_max = radii.back();
    Trajectory traj = integrate(problem, -(X_max + 2.0), cfg);
    Complex acc = 0.0;
    for (double Xj : radii) acc += symmetric_integral(traj, Xj);

    IntegralResult r;
    r.X = X_base;
    r.raw = symmetric_integral(traj, X_base);
    r.averaged = acc / static_cast<double>(n_samples);
    r.predicted = detail::predicted_for(problem.params);
    r.abs_error = std::abs(r.averaged - r.predicted);
    r.method = TotalsMethod::PeriodAveraged;
    return r;
}

// Cross-check estimator: least-squares fit of
//   F(X) ~ V + X^{-3/4} (A cos phi + B sin phi),  phi = (2/3) X^{3/2}
// over two periods of samples; returns V.
inline IntegralResult tail_fit_total(const PIIProblem& problem, double X_base,
                                     int n_samples, const SolverConfig& cfg = {}) {
    if (X_base < 40.0) throw domain_error("tail_fit_total: X_base must be >= 40");
    int m = std::max(2 * n_samples, 12);
    double phi0 = 2.0 / 3.0 * std::pow(X_base, 1.5);
    std::vector<double> radii(m);
    for (int j = 0; j < m; ++j)
        radii[j] = std::pow(1.5 * (phi0 + 2.0 * kPi * j / (m / 2)), 2.0 / 3.0);
    Trajectory traj = integrate(problem, -(radii.back() + 2.0), cfg);

    // normal equations for the 3 real (or complex) coefficients
    std::array<std::array<double, 3>, 3> ata{};
    std::array<Complex, 3> atb{};
    Complex raw;
    for (int j = 0; j < m; ++j) {
        double X = radii[j];
        Complex F = symmetric_integral(traj, X);
        if (j == 0) raw = F;
        double phi = 2.0 / 3.0 * std::pow(X, 1.5);
        double env = std::pow(X, -0.75);
        std::array<double, 3> row{1.0, env * std::cos(phi), env * std::sin(phi)};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) ata[r][c] += row[r] * row[c];
            atb[r] += row[r] * F;
        }
    }
    // solve 3x3 by Gaussian elimination
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(ata[r][c]) > std::abs(ata[piv][c])) piv = r;
        std::swap(ata[c], ata[piv]);
        std::swap(atb[c], atb[piv]);
        for (int r = c + 1; r < 3; ++r) {
            double f = ata[r][c] / ata[c][c];
            for (int cc = c; cc < 3; ++cc) ata[r][cc] -= f * ata[c][cc];
            atb[r] -= f * atb[c];
        }
    }
    std::array<Complex, 3> sol{};
    for (int r = 2; r >= 0; --r) {
        Complex s = atb[r];
        for (int c = r + 1; c < 3; ++c) s -= ata[r][c] * sol[c];
        sol[r] = s / ata[r][r];
    }

    IntegralResult res;
    res.X = X_base;
    res.raw = raw;
    res.averaged = sol[0];
    res.predicted = detail::predicted_for(problem.params);
    res.abs_error = std::abs(res.averaged - res.predicted);
    res.method = TotalsMethod::TailFit;
    return res;
}

// Envelope-decay slope of |F(X) - predicted| over the range spanned by
// X_list; the oscillation remainder is expected to decay like X^{-3/4}.
inline double remainder_slope(const PIIProblem& problem, const std::vector<double>& X_list,
                              const SolverConfig& cfg = {}) {
    if (X_list.size() < 5)
        throw domain_error("remainder_slope: need at least 5 truncation radii");
    double lo = *std::min_element(X_list.begin(), X_list.end());
    double hi = *std::max_element(X_list.begin(), X_list.end());
    if (lo < 10.0 || hi / lo < 4.0)
        throw domain_error("remainder_slope: radii must span several octaves above 10");

    Trajectory traj = integrate(problem, -(hi + 2.0), cfg);
    Complex predicted = detail::predicted_for(problem.params);

    // incremental fine sweep of F(X)
    double step = std::min(0.05, 2.0 * kPi / std::sqrt(hi) / 8.0);
    int n = static_cast<int>((hi - lo) / step) + 1;
    std::vector<double> xs(n), env(n);
    Complex F = symmetric_integral(traj, lo);
    auto val = [&](double t) { return traj.value(t); };
    double anchor = traj.x_max();
    for (int i = 0; i < n; ++i) {
        double X = lo + i * step;
        if (i > 0) {
            double Xp = xs[i - 1];
            double e1 = 0, e2 = 0;
            F += detail::gk15_panel(val, -X, -Xp, e1);
            if (X <= anchor)
                F += detail::gk15_panel(val, Xp, X, e2);
            else if (Xp >= anchor)
                F += traj.background_integral(Xp, X);
            else {
                F += detail::gk15_panel(val, Xp, anchor, e2);
                F += traj.background_integral(anchor, X);
            }
        }
        xs[i] = X;
        env[i] = std::abs(F - predicted);
    }

    // local maxima of the oscillation envelope
    std::vector<double> lx, ly;
    for (int i = 1; i + 1 < n; ++i) {
        if (env[i] > env[i - 1] && env[i] >= env[i + 1]) {
            lx.push_back(std::log(xs[i]));
            ly.push_back(std::log(env[i]));
        }
    }
    if (lx.size() < 10 || *std::max_element(env.begin(), env.end()) < 1e-9)
        throw convergence_error("remainder_slope: no resolvable oscillation envelope");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    double nn = static_cast<double>(lx.size());
    return (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
}

}  // namespace pii
