#ifndef HYPERCAUCHY_VERIFICATION_HPP
#define HYPERCAUCHY_VERIFICATION_HPP

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hypercauchy {

/// One verified identity / PDE / normalisation claim. `tolerance` is
/// resolved to an absolute bound at construction, so the invariant is
/// always: passed  <=>  |measured - expected| <= tolerance.
struct CheckReport {
    std::string check_name;
    bool passed = false;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

/// Product of the complex quadratic factors over odd k of both signs
/// against x^{2^n} + t^{2^n}, plus the successive-regrouping cascade.
CheckReport verify_product_identity(int n, double x, double t);

/// Unit mass of a registered law. Descriptors:
///   "cauchy:t=1"  "hyper:n=3,t=2"  "third:t=1"  "p6:t=0.5"
///   "asym:k=2,t=1"  "asym_m:m=3,t=1"
CheckReport verify_normalization(const std::string& law);

/// Component normalisation integral
///   int (x^2+t^2) / (x^4+t^4+2x^2t^2 cos(k pi/2^{n-1})) dx
/// against (pi/t) / cos(k pi/2^n).
CheckReport verify_component_integral(int n, int k, double t);

/// Characteristic-ODE residual of the closed-form Fourier transform on
/// a beta grid. Descriptors: "hyper:n=N", "odd:k=K" (order 2K+1),
/// "p6", "even:n=N" (all 2n roots of the even-order problem).
CheckReport verify_pde_fourier(const std::string& descriptor);

/// Finite-difference PDE residual at (x, t) with step h, normalised by
/// the largest single term; also reports the shrink ratio under h/2.
/// Laws: "p4", "third", "asym_m3", "p6".
CheckReport verify_pde_fd(const std::string& law, double x, double t,
                          double h);

/// Half-line mass of the odd-order composition law against
/// (1/2)(1 + (-1)^k/(2k+1)).
CheckReport verify_halfline_mass(int k, double t);

/// Airy-kernel composition integral against the third-order law.
CheckReport verify_airy_composition(double x, double t);

/// int_0^inf s K_{1/3}(ys) K_{1/3}(zs) ds against the closed product
/// formula (y != z) or its y -> z limit.
CheckReport verify_bessel_product_integral(double y, double z);

/// Renormalised Bessel-product chain at (x, t) against the third-order
/// law.
CheckReport verify_renorm_third_order(double x, double t);

/// t-derivative limits of the classical Cauchy density at t -> 0+
/// against (-1)^k k! cos(pi(k+1)/2) / (pi |x|^{k+1}), k in [0, 3].
CheckReport verify_initial_conditions(int k, double x);

/// Numerical Fourier transform of a law's density against its closed
/// form CF on a beta grid. Laws as in verify_normalization.
CheckReport verify_cf_match(const std::string& law,
                            std::span<const double> betas);

/// Oscillatory Fourier transform int e^{i beta x} pdf(x) dx: adaptive
/// quadrature on a finite window plus integration-by-parts tail
/// corrections (plain infinite-domain transforms cannot certify 1e-6
/// against the slowly decaying oscillatory tails).
std::complex<double> fourier_transform_pdf(
    const std::function<double(double)>& pdf, double beta);

/// Density and closed-form CF of a registered law descriptor.
std::function<double(double)> law_pdf(const std::string& descriptor);
std::function<std::complex<double>(double)> law_cf(
    const std::string& descriptor);

/// Full default suite, optionally filtered by suite prefix:
/// "all", "identity", "normalization", "component", "pde", "halfline",
/// "airy", "bessel", "initial", "cf".
std::vector<CheckReport> run_suite(const std::string& filter = "all");

std::string report_json(const std::vector<CheckReport>& reports);
std::string report_table(const std::vector<CheckReport>& reports);

}  // namespace hypercauchy

#endif
