#ifndef HYPERCAUCHY_NUMERICS_HPP
#define HYPERCAUCHY_NUMERICS_HPP

#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace hypercauchy {

/// Outcome of an adaptive quadrature run. `converged` is true when the
/// accumulated error estimate met the requested tolerance within the
/// interval budget; otherwise `value` is the best available estimate.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Uniform grid on [x_min, x_max] with `points` >= 2 samples.
struct GridSpec {
    double x_min = -5.0;
    double x_max = 5.0;
    int points = 2001;
};

inline constexpr double kDefaultAbsTol = 1e-10;
inline constexpr double kDefaultRelTol = 1e-8;

/// Adaptive Gauss quadrature (paired 7/15-point rules, error-driven
/// bisection) on a finite interval.
QuadratureResult integrate_interval(const std::function<double(double)>& f,
                                    double a, double b,
                                    double abs_tol = kDefaultAbsTol,
                                    double rel_tol = kDefaultRelTol,
                                    int max_intervals = 20000);

/// Integral of f over the whole real line via the x = tan(theta)
/// substitution. Suited to integrands with Cauchy-like power tails.
QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                     double abs_tol = kDefaultAbsTol,
                                     double rel_tol = kDefaultRelTol);

/// Integral of f over [0, inf) via the s = u/(1-u) substitution.
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     double abs_tol = kDefaultAbsTol,
                                     double rel_tol = kDefaultRelTol);

/// Central finite difference of derivative order 1..6 with the minimal
/// O(h^2) stencil. Throws std::domain_error for h <= 0 or bad order.
double finite_difference(const std::function<double(double)>& f, int order,
                         double x0, double h);

/// Golden-section maximiser on [a, b]. Throws std::runtime_error when no
/// interior maximum is detected (maximum sits at a bracket endpoint).
double find_local_max(const std::function<double(double)>& f, double a,
                      double b, double x_tol = 1e-9);

/// One-sample Kolmogorov-Smirnov statistic D_N = sup_x |F_N(x) - F(x)|.
double ks_statistic(std::span<const double> values,
                    const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov statistic between empirical CDFs.
double ks_two_sample_statistic(std::span<const double> a,
                               std::span<const double> b);

/// One-sample KS critical value at the 1% level, 1.63/sqrt(N).
inline double ks_critical_1pct(std::size_t n) {
    return 1.63 / std::sqrt(static_cast<double>(n));
}

/// Two-sample KS critical value at the 1% level.
inline double ks_two_sample_critical_1pct(std::size_t n, std::size_t m) {
    return 1.628 * std::sqrt(static_cast<double>(n + m) /
                             (static_cast<double>(n) * static_cast<double>(m)));
}

}  // namespace hypercauchy

#endif
