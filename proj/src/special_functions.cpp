#include "hypercauchy/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hypercauchy {

namespace {

constexpr double kThird = 1.0 / 3.0;
const double kGammaThird = 2.678938534707747633;      // Gamma(1/3)
const double kGammaTwoThirds = 1.354117939426400417;  // Gamma(2/3)
const double kCbrt3 = 1.442249570307408382;           // 3^{1/3}

// Ascending series I_nu(x) = sum_k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)).
// All terms positive for x > 0, so no cancellation.
double bessel_i_series(double nu, double x) {
    const double q = 0.25 * x * x;
    double term = std::pow(0.5 * x, nu) / gamma_fn(1.0 + nu);
    double sum = term;
    for (int k = 0; k < 400; ++k) {
        term *= q / ((k + 1.0) * (k + 1.0 + nu));
        sum += term;
        if (term < 1e-17 * sum) return sum;
    }
    throw std::runtime_error("bessel_i_series: no convergence");
}

// I_nu(x) ~ e^x/sqrt(2 pi x) * sum_k (-1)^k a_k(nu)/x^k for large x.
double bessel_i_asymptotic(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        const double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        const double next = term * num / (8.0 * k * x);
        if (std::abs(next) >= std::abs(term)) break;  // divergent tail
        term = next;
        sum += (k % 2 ? -term : term);
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::exp(x) / std::sqrt(2.0 * M_PI * x) * sum;
}

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt, evaluated by the
// midpoint rule. The integrand is analytic and decays double
// exponentially, so the rule converges like exp(-c/h); the saddle at
// t = 0 narrows like 1/sqrt(x), hence the step cap.
double bessel_k_cosh_integral(double nu, double x) {
    const double h = std::min(0.16, 0.8 / std::sqrt(x));
    double sum = 0.0;
    for (int j = 0; j < 400; ++j) {
        const double t = (j + 0.5) * h;
        const double ch = std::cosh(t);
        const double w = std::exp(-x * ch) * std::cosh(nu * t);
        sum += w;
        if (x * (ch - 1.0) > 60.0) break;
    }
    return sum * h;
}

// Maclaurin series of Ai regrouped into the two classic subseries
//   sum_m (3^{1/3}w)^{3m}/(3m)!   Gamma(m+1/3)
//   sum_m (3^{1/3}w)^{3m+1}/(3m+1)! Gamma(m+2/3)
// with stable term recurrences (the k = 2 mod 3 terms vanish).
double airy_ai_series(double w) {
    const double w3 = 3.0 * w * w * w;
    double a = kGammaThird;          // m = 0 term of the first series
    double b = kCbrt3 * w * kGammaTwoThirds;  // m = 0 of the second
    double sum = a - b;
    for (int m = 0; m < 200; ++m) {
        a *= w3 * (m + 1.0 / 3.0) /
             ((3.0 * m + 1.0) * (3.0 * m + 2.0) * (3.0 * m + 3.0));
        b *= w3 * (m + 2.0 / 3.0) /
             ((3.0 * m + 2.0) * (3.0 * m + 3.0) * (3.0 * m + 4.0));
        sum += a - b;
        if (std::abs(a) + std::abs(b) < 1e-17 * std::abs(sum) + 1e-305)
            break;
    }
    // (3^{-2/3}/pi) * sin(2pi/3) = 3^{-2/3} * sqrt(3)/(2 pi)
    const double c = std::sqrt(3.0) / (2.0 * M_PI * kCbrt3 * kCbrt3);
    return c * sum;
}

// Oscillatory asymptotics of Ai(-z) for large z (DLMF 9.7.9):
//   Ai(-z) = (sin(zeta+pi/4) P - cos(zeta+pi/4) Q) / (sqrt(pi) z^{1/4}),
//   zeta = (2/3) z^{3/2}, u_k = u_{k-1} (6k-5)(6k-3)(6k-1)/(216 k (2k-1)).
double airy_ai_negative_asymptotic(double z) {
    const double zeta = 2.0 / 3.0 * std::pow(z, 1.5);
    double u = 1.0;
    double p = 1.0, q = 0.0;
    double zk = 1.0;  // zeta^{-k}
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k < 40; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
             (216.0 * k * (2.0 * k - 1.0));
        zk /= zeta;
        const double term = u * zk;
        if (std::abs(term) >= prev) break;  // past the smallest term
        prev = std::abs(term);
        const double s = ((k / 2) % 2) ? -1.0 : 1.0;
        if (k % 2)
            q += s * term;
        else
            p += s * term;
        if (std::abs(term) < 1e-17) break;
    }
    const double phase = zeta + 0.25 * M_PI;
    return (std::sin(phase) * p - std::cos(phase) * q) /
           (std::sqrt(M_PI) * std::pow(z, 0.25));
}

}  // namespace

StableParams::StableParams(double alpha_, double gamma_, double t_)
    : alpha(alpha_), gamma(gamma_), t(t_) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("StableParams: alpha must be in (0,1)");
    if (!(t > 0.0)) throw std::domain_error("StableParams: t must be > 0");
    if (!(sigma() > 0.0))
        throw std::domain_error("StableParams: cos(pi*gamma/2) must be > 0");
    const double th = theta();
    if (!(th >= -1.0 - 1e-12 && th <= 1.0 + 1e-12))
        throw std::domain_error("StableParams: skewness out of [-1,1]");
}

double StableParams::theta() const {
    return std::tan(M_PI * gamma / 2.0) / std::tan(M_PI * alpha / 2.0);
}

double StableParams::sigma() const { return std::cos(M_PI * gamma / 2.0); }

double gamma_fn(double x) {
    // Lanczos, g = 7, 9 coefficients.
    static const double g = 7.0;
    static const double coef[9] = {
        0.99999999999980993,      676.5203681218851,
        -1259.1392167224028,      771.32342877765313,
        -176.61502916214059,      12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6,
        1.5056327351493116e-7};

    if (!std::isfinite(x)) throw std::domain_error("gamma_fn: non-finite x");
    if (x < 0.5) {
        if (x == std::floor(x))
            throw std::domain_error("gamma_fn: pole at non-positive integer");
        return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
    }
    x -= 1.0;
    double s = coef[0];
    for (int i = 1; i < 9; ++i) s += coef[i] / (x + i);
    const double base = x + g + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(base, x + 0.5) * std::exp(-base) *
           s;
}

double airy_ai(double w) {
    if (!std::isfinite(w)) throw std::domain_error("airy_ai: non-finite w");
    if (w > 4.0) return airy_ai_bessel(w);
    if (w < -7.0) return airy_ai_negative_asymptotic(-w);
    return airy_ai_series(w);
}

double airy_ai_bessel(double w) {
    if (!(w > 0.0))
        throw std::domain_error("airy_ai_bessel: requires w > 0");
    const double z = 2.0 / 3.0 * std::pow(w, 1.5);
    if (z <= 2.0) {
        // direct I difference is still well conditioned here
        const double diff = bessel_i(-kThird, z) - bessel_i(kThird, z);
        return std::sqrt(w) / 3.0 * diff;
    }
    // I_{-1/3}(z) - I_{1/3}(z) = (2 sin(pi/3)/pi) K_{1/3}(z); the direct
    // subtraction loses ~e^{2z} of precision.
    const double diff = std::sqrt(3.0) / M_PI * bessel_k_third(z);
    return std::sqrt(w) / 3.0 * diff;
}

double bessel_i(double nu, double x) {
    if (std::abs(std::abs(nu) - kThird) > 1e-12)
        throw std::domain_error("bessel_i: nu restricted to +-1/3");
    if (!(x > 0.0)) throw std::domain_error("bessel_i: requires x > 0");
    if (x <= 30.0) return bessel_i_series(nu, x);
    return bessel_i_asymptotic(nu, x);
}

double bessel_k_third(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k_third: requires x > 0");
    if (x <= 2.0) {
        // K_nu = pi (I_{-nu} - I_nu) / (2 sin(pi nu)); sin(pi/3) = sqrt(3)/2
        const double diff = bessel_i_series(-kThird, x) -
                            bessel_i_series(kThird, x);
        return M_PI * diff / std::sqrt(3.0);
    }
    return bessel_k_cosh_integral(kThird, x);
}

double stable_density_series(double x, const StableParams& p,
                             const SeriesControl& c) {
    if (c.max_terms < 1 || !(c.abs_tol > 0.0) || !(c.rel_tol > 0.0))
        throw std::domain_error("stable_density_series: bad SeriesControl");
    if (!(x > 0.0))
        throw std::domain_error("stable_density_series: requires x > 0");

    const double scale = std::pow(p.t, 1.0 / p.alpha);
    const double xs = x / scale;

    double fact = 1.0;  // r!
    double sum = 0.0;
    int small_streak = 0;
    for (int r = 0; r < c.max_terms; ++r) {
        if (r > 0) fact *= r;
        if (!std::isfinite(fact)) break;
        const double a1 = p.alpha * (r + 1.0);
        const double term = gamma_fn(a1) / fact * std::pow(xs, -a1 - 1.0) *
                            std::sin(M_PI / 2.0 * (p.gamma + p.alpha) *
                                     (r + 1.0));
        sum += (r % 2 ? -term : term);
        // the sine factor vanishes on a periodic subsequence, so a single
        // small term cannot end the sum; require two in a row
        if (std::abs(term) < c.abs_tol &&
            std::abs(term) < c.rel_tol * std::abs(sum)) {
            if (++small_streak >= 2) return p.alpha / M_PI * sum / scale;
        } else {
            small_streak = 0;
        }
    }
    throw std::runtime_error(
        "stable_density_series: series did not converge within max_terms "
        "(x too small for double-precision summation?)");
}

double stable13_subordinator_pdf(double s, double t) {
    if (!(s > 0.0) || !(t > 0.0))
        throw std::domain_error("stable13_subordinator_pdf: requires s,t > 0");
    const double u = std::cbrt(3.0 * s);
    return t / s / u * airy_ai(t / u);
}

double third_order_kernel(double x, double t) {
    if (!(t > 0.0))
        throw std::domain_error("third_order_kernel: requires t > 0");
    const double u = std::cbrt(3.0 * t);
    return airy_ai(x / u) / u;
}

}  // namespace hypercauchy
