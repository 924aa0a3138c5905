#ifndef HYPERCAUCHY_SPECIAL_FUNCTIONS_HPP
#define HYPERCAUCHY_SPECIAL_FUNCTIONS_HPP

namespace hypercauchy {

/// Truncation control for series evaluations. A series stops once
/// |term| < abs_tol AND |term| < rel_tol * |partial sum|; hitting
/// max_terms first is reported as a truncation failure.
struct SeriesControl {
    int max_terms = 500;
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
};

/// Parameters of a one-sided stable law of index alpha in (0,1) with
/// skewness angle gamma and time scale t. gamma = alpha is the fully
/// positively skewed case (skewness +1).
struct StableParams {
    double alpha;
    double gamma;
    double t = 1.0;

    StableParams(double alpha_, double gamma_, double t_ = 1.0);
    /// cot(pi*alpha/2) * tan(pi*gamma/2), must lie in [-1, 1]
    double theta() const;
    /// cos(pi*gamma/2) > 0
    double sigma() const;
};

/// Gamma function by Lanczos approximation (g = 7, 9 terms), with
/// reflection for x < 1/2. Relative accuracy around 1e-14 on the real
/// axis away from the poles.
double gamma_fn(double x);

/// Airy function Ai(w) for real w.
///
/// Region switches: Maclaurin series for w in [-7, 4]; the Bessel
/// representation Ai(w) = (sqrt(w)/3)[I_{-1/3}(z) - I_{1/3}(z)],
/// z = (2/3) w^{3/2}, for w > 4 (the I difference is carried through
/// K_{1/3} since the direct subtraction loses all precision there);
/// oscillatory asymptotics for w < -7. Relative accuracy ~1e-11 or
/// better on [-5, 10].
double airy_ai(double w);

/// Ai(w) through the modified-Bessel route, valid for w > 0. Exposed
/// separately so the two representations can be compared directly.
double airy_ai_bessel(double w);

/// Modified Bessel function of the first kind, nu restricted to +-1/3.
/// Ascending series for x <= 30, exponential asymptotics beyond.
double bessel_i(double nu, double x);

/// K_{1/3}(x) for x > 0. Uses pi(I_{-nu} - I_nu)/(2 sin pi*nu) for
/// x <= 2 and the integral int_0^inf exp(-x cosh t) cosh(nu t) dt by
/// exponentially convergent midpoint rule beyond (the plain asymptotic
/// series cannot reach 1e-10 until x ~ 14).
double bessel_k_third(double x);

/// Series representation of the one-sided stable density
///   p_alpha(x; gamma, 1) = (alpha/pi) sum_r (-1)^r Gamma(alpha(r+1))/r!
///                          x^{-alpha(r+1)-1} sin(pi/2 (gamma+alpha)(r+1)),
/// rescaled to time t through the self-similarity
/// p(x, t) = t^{-1/alpha} p(x t^{-1/alpha}, 1). Requires x > 0.
double stable_density_series(double x, const StableParams& p,
                             const SeriesControl& c = {});

/// Density of the stable-1/3 subordinator at time t:
///   (t/s) (3s)^{-1/3} Ai( t / (3s)^{1/3} ),  s > 0.
double stable13_subordinator_pdf(double s, double t);

/// Signed fundamental solution of u_t = -u_xxx:
///   u3(x, t) = (3t)^{-1/3} Ai( x / (3t)^{1/3} ).
double third_order_kernel(double x, double t);

}  // namespace hypercauchy

#endif
