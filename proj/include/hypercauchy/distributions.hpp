#ifndef HYPERCAUCHY_DISTRIBUTIONS_HPP
#define HYPERCAUCHY_DISTRIBUTIONS_HPP

#include <complex>
#include <memory>
#include <vector>

namespace hypercauchy {

/// Parameters of the hyper-Cauchy law of order 2^n at time scale t.
/// The density is a uniform mixture of 2^{n-2} bimodal components
/// indexed by odd k in [1, 2^{n-1}-1].
struct HyperCauchyParams {
    int n;
    double t;

    HyperCauchyParams(int n_, double t_);
    int component_count() const { return 1 << (n - 2); }
};

/// One odd-k component of the hyper-Cauchy mixture: an equal-weight
/// two-Cauchy mixture with locations +-t sin(k pi/2^n) and scale
/// t cos(k pi/2^n).
struct ComponentSpec {
    int k;
    double angle;            // k pi / 2^n
    double weight;           // 2^{-(n-2)}
    double cauchy_location;  // t sin(angle)
    double cauchy_scale;     // t cos(angle)
    double t;
};

/// Location/scale parameters of the asymmetric Cauchy laws tied to
/// odd-order (2k+1) equations, or the generic index-m family
/// f(x,t;m) with scale t cos(pi/2m) and location -t sin(pi/2m).
struct AsymCauchyParams {
    int k = 0;  // order 2k+1 when > 0
    int m = 0;  // generic index when > 0
    double t;
    double location;
    double scale;

    /// law of the odd-order composition: scale t cos(pi/(2(2k+1))),
    /// location (-1)^k t sin(pi/(2(2k+1)))
    static AsymCauchyParams composition(int k, double t);
    /// generic family member of index m >= 2
    static AsymCauchyParams generic(int m, double t);
};

// ---- classical Cauchy --------------------------------------------------

double cauchy_pdf(double x, double t);
double cauchy_cdf(double x, double t);

/// General location/scale Cauchy density and CDF.
double cauchy_pdf_ls(double x, double location, double scale);
double cauchy_cdf_ls(double x, double location, double scale);

// ---- hyper-Cauchy family ----------------------------------------------

ComponentSpec make_component(int n, int k, double t);
std::vector<ComponentSpec> component_specs(const HyperCauchyParams& p);

/// Canonical evaluation path (component sum). Scales to n = 20+.
double hyper_cauchy_pdf(double x, const HyperCauchyParams& p);

/// Superposition of Cauchy densities at complex times, summed over odd
/// k of both signs. Requires n <= 6. Throws if the imaginary residue
/// exceeds 1e-9 of the real part.
double hyper_cauchy_pdf_complex(double x, const HyperCauchyParams& p);

/// Product-form evaluation with the x^{2^n} + t^{2^n} denominator.
/// Requires n <= 6 and max(|x|, t)^{2^n} <= 1e100 (range error
/// otherwise).
double hyper_cauchy_pdf_product(double x, const HyperCauchyParams& p);

/// Regrouped pairing of mirror components (valid for n >= 3); equals
/// the canonical path. Used as a cross-check.
double hyper_cauchy_pdf_regrouped(double x, const HyperCauchyParams& p);

/// Characteristic function, normalised so CF(0) = 1:
///   (1/2^{n-2}) sum_{odd k>=1} exp(-t|b| cos(k pi/2^n)) cos(t b sin(k pi/2^n))
double hyper_cauchy_cf(double beta, const HyperCauchyParams& p);

/// Closed-form CDF through the per-component two-Cauchy mixture.
double hyper_cauchy_cdf(double x, const HyperCauchyParams& p);

/// Locations of the local maxima of the density on [-10t, 10t],
/// found by golden-section on the positive half (symmetric set).
std::vector<double> find_modes(const HyperCauchyParams& p);

// ---- mixture components ------------------------------------------------

/// Symmetrised component density h_k(w, t) (bimodal for
/// sin(k pi/2^n) > 1/2), w in R.
double component_pdf(double w, const ComponentSpec& c);
double component_cdf(double w, const ComponentSpec& c);

/// Folded density f_k(w, t) = 2 h_k(w, t) on w >= 0.
double folded_pdf(double w, const ComponentSpec& c);
double folded_cdf(double w, const ComponentSpec& c);

/// Disturbance factor g_k(x,t) = (x^4+t^4+2x^2t^2) /
/// (x^4+t^4+2x^2t^2 cos(k pi/2^{n-1})); two maxima at x = +-t.
double disturbance_g(double x, double t, int k, int n);

// ---- odd-order / sixth-order laws ---------------------------------------

double asym_cauchy_pdf(double x, const AsymCauchyParams& p);
double asym_cauchy_cdf(double x, const AsymCauchyParams& p);

/// Half-line mass of the odd-order composition law:
///   P(X > 0) = (1/2)(1 + (-1)^k/(2k+1)).
double asym_halfline_mass(int k);

/// Third-order law (sqrt(3)/2pi) t / (x^2 + xt + t^2); the polynomial
/// denominator never vanishes, so no removable singularity materialises.
double third_order_pdf(double x, double t);
double third_order_cdf(double x, double t);

/// CF of the third-order law: exp(-(sqrt(3)/2) t |b| - i t b / 2).
std::complex<double> third_order_cf(double beta, double t);

/// Sixth-order law (unimodal, asymmetric).
double p6_pdf(double x, double t);

/// Same law evaluated as the average of two complex-time third-order
/// terms; cross-check path.
double p6_pdf_complex(double x, double t);

}  // namespace hypercauchy

#endif
