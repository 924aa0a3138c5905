#include "hypercauchy/verification.hpp"

#include <cmath>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hypercauchy/distributions.hpp"
#include "hypercauchy/numerics.hpp"
#include "hypercauchy/special_functions.hpp"

namespace hypercauchy {

namespace {

using cplx = std::complex<double>;

cplx ipow(cplx z, unsigned n) {
    cplx acc(1.0, 0.0);
    while (n) {
        if (n & 1) acc *= z;
        z *= z;
        n >>= 1;
    }
    return acc;
}

CheckReport make_report(std::string name, double measured, double expected,
                        double abs_tol, std::string detail = {}) {
    CheckReport r;
    r.check_name = std::move(name);
    r.measured = measured;
    r.expected = expected;
    r.tolerance = abs_tol;
    r.detail = std::move(detail);
    r.passed = std::isfinite(measured) &&
               std::abs(measured - expected) <= abs_tol;
    return r;
}

// ---- law descriptor parsing -------------------------------------------

std::map<std::string, double> parse_kv(const std::string& s) {
    std::map<std::string, double> kv;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad law parameter: " + item);
        kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
    return kv;
}

struct LawParts {
    std::string family;
    std::map<std::string, double> kv;
};

LawParts split_law(const std::string& descriptor) {
    const auto colon = descriptor.find(':');
    LawParts parts;
    parts.family = descriptor.substr(0, colon);
    if (colon != std::string::npos)
        parts.kv = parse_kv(descriptor.substr(colon + 1));
    return parts;
}

double kv_get(const std::map<std::string, double>& kv, const std::string& key,
              double fallback = std::nan("")) {
    auto it = kv.find(key);
    if (it != kv.end()) return it->second;
    if (std::isnan(fallback))
        throw std::invalid_argument("law descriptor missing key: " + key);
    return fallback;
}

}  // namespace

std::function<double(double)> law_pdf(const std::string& descriptor) {
    const LawParts parts = split_law(descriptor);
    const double t = kv_get(parts.kv, "t", 1.0);
    if (parts.family == "cauchy")
        return [t](double x) { return cauchy_pdf(x, t); };
    if (parts.family == "hyper") {
        HyperCauchyParams p(static_cast<int>(kv_get(parts.kv, "n")), t);
        return [p](double x) { return hyper_cauchy_pdf(x, p); };
    }
    if (parts.family == "third")
        return [t](double x) { return third_order_pdf(x, t); };
    if (parts.family == "p6")
        return [t](double x) { return p6_pdf(x, t); };
    if (parts.family == "asym") {
        const auto p = AsymCauchyParams::composition(
            static_cast<int>(kv_get(parts.kv, "k")), t);
        return [p](double x) { return asym_cauchy_pdf(x, p); };
    }
    if (parts.family == "asym_m") {
        const auto p = AsymCauchyParams::generic(
            static_cast<int>(kv_get(parts.kv, "m")), t);
        return [p](double x) { return asym_cauchy_pdf(x, p); };
    }
    throw std::invalid_argument("unknown law: " + descriptor);
}

std::function<cplx(double)> law_cf(const std::string& descriptor) {
    const LawParts parts = split_law(descriptor);
    const double t = kv_get(parts.kv, "t", 1.0);
    if (parts.family == "cauchy")
        return [t](double b) { return cplx(std::exp(-t * std::abs(b)), 0.0); };
    if (parts.family == "hyper") {
        HyperCauchyParams p(static_cast<int>(kv_get(parts.kv, "n")), t);
        return [p](double b) { return cplx(hyper_cauchy_cf(b, p), 0.0); };
    }
    if (parts.family == "third")
        return [t](double b) { return third_order_cf(b, t); };
    if (parts.family == "p6") {
        return [t](double b) {
            // average of the two complex-time third-order transforms
            const cplx tau = std::polar(t, M_PI / 6.0);
            const cplx e1 = std::exp(-std::sqrt(3.0) / 2.0 * tau *
                                         std::abs(b) -
                                     cplx(0.0, 0.5) * tau * b);
            const cplx tau2 = std::conj(tau);
            const cplx e2 = std::exp(-std::sqrt(3.0) / 2.0 * tau2 *
                                         std::abs(b) -
                                     cplx(0.0, 0.5) * tau2 * b);
            return 0.5 * (e1 + e2);
        };
    }
    if (parts.family == "asym" || parts.family == "asym_m") {
        const auto p = parts.family == "asym"
                           ? AsymCauchyParams::composition(
                                 static_cast<int>(kv_get(parts.kv, "k")), t)
                           : AsymCauchyParams::generic(
                                 static_cast<int>(kv_get(parts.kv, "m")), t);
        return [p](double b) {
            return std::polar(std::exp(-p.scale * std::abs(b)),
                              p.location * b);
        };
    }
    throw std::invalid_argument("unknown law: " + descriptor);
}

CheckReport verify_product_identity(int n, double x, double t) {
    if (n < 2 || n > 6)
        throw std::domain_error("verify_product_identity: n in [2,6]");
    const double big = std::max(std::abs(x), std::abs(t));
    if (big > 1.0 && std::ldexp(1.0, n) * std::log10(big) > 100.0)
        throw std::range_error("verify_product_identity: x^{2^n} overflow");

    const double n2 = std::ldexp(1.0, n);
    const double expected = std::pow(std::abs(x), n2) + std::pow(std::abs(t), n2);

    // complex route
    const int kmax = (1 << (n - 1)) - 1;
    cplx prod(1.0, 0.0);
    for (int k = -kmax; k <= kmax; k += 2) {
        const cplx z = std::polar(t, k * M_PI / std::ldexp(1.0, n));
        prod *= x * x + z * z;
    }
    double worst = std::abs(prod - expected) / expected;

    // successive regrouping: level j groups factors of degree 2^{j+1}
    for (int j = 1; j <= n - 1; ++j) {
        const double xj = std::pow(std::abs(x), std::ldexp(1.0, j));
        const double tj = std::pow(std::abs(t), std::ldexp(1.0, j));
        double pj = 1.0;
        for (int k = 1; k <= (1 << (n - j)) - 1; k += 2)
            pj *= xj * xj + tj * tj +
                  2.0 * xj * tj *
                      std::cos(k * M_PI / std::ldexp(1.0, n - j));
        worst = std::max(worst, std::abs(pj - expected) / expected);
    }

    return make_report("identity/product/n=" + std::to_string(n), worst, 0.0,
                       1e-9,
                       "relative deviation, complex route + cascade at x=" +
                           std::to_string(x) + " t=" + std::to_string(t));
}

CheckReport verify_normalization(const std::string& law) {
    const auto pdf = law_pdf(law);
    const QuadratureResult q = integrate_real_line(pdf, 1e-10, 1e-10);
    return make_report("normalization/" + law, q.value, 1.0, 1e-8,
                       q.converged ? "" : "quadrature did not converge");
}

CheckReport verify_component_integral(int n, int k, double t) {
    const double c2 = std::cos(k * M_PI / std::ldexp(1.0, n - 1));
    const auto f = [t, c2](double x) {
        const double x2 = x * x, t2 = t * t;
        return (x2 + t2) /
               (x2 * x2 + t2 * t2 + 2.0 * x2 * t2 * c2);
    };
    const double expected =
        M_PI / t / std::cos(k * M_PI / std::ldexp(1.0, n));
    const QuadratureResult q = integrate_real_line(f, 1e-12, 1e-12);
    return make_report("component/n=" + std::to_string(n) +
                           ",k=" + std::to_string(k) + ",t=" +
                           std::to_string(t),
                       q.value, expected, 1e-8 * expected,
                       "relative tolerance 1e-8");
}

CheckReport verify_pde_fourier(const std::string& descriptor) {
    const LawParts parts = split_law(descriptor);
    static const double betas[] = {-10.0, -5.0, -2.7, -1.0, -0.3,
                                   0.3,   1.0,  2.7,  5.0,  10.0};
    double worst = 0.0;

    if (parts.family == "hyper") {
        const int n = static_cast<int>(kv_get(parts.kv, "n"));
        const unsigned order = 1u << n;
        const int kmax = (1 << (n - 1)) - 1;
        for (double beta : betas) {
            const double sgn = beta < 0 ? -1.0 : 1.0;
            for (int k = -kmax; k <= kmax; k += 2) {
                // root of e^{-t|b| e^{ik pi/2^n}}, unit-modulus part
                const cplx root = -std::polar(1.0, k * M_PI / std::ldexp(1.0, n));
                const cplx res = ipow(root, order) +
                                 ipow(cplx(0.0, -sgn), order);
                worst = std::max(worst, std::abs(res));
            }
        }
    } else if (parts.family == "odd") {
        const int k = static_cast<int>(kv_get(parts.kv, "k"));
        const unsigned order = 2u * k + 1u;
        const double phi = M_PI / (2.0 * (2.0 * k + 1.0));
        const double par = (k % 2 ? -1.0 : 1.0);  // (-1)^k
        for (double beta : betas) {
            const double sgn = beta < 0 ? -1.0 : 1.0;
            const cplx root = -std::polar(1.0, -phi * par * sgn);
            const cplx res =
                ipow(root, order) + ipow(cplx(0.0, -sgn), order);
            worst = std::max(worst, std::abs(res));
        }
    } else if (parts.family == "p6") {
        for (double beta : betas) {
            const double sgn = beta < 0 ? -1.0 : 1.0;
            for (double pm : {1.0, -1.0}) {
                // exponent of the complex-time third-order transform
                const cplx root =
                    -std::polar(1.0, (pm + sgn) * M_PI / 6.0);
                const cplx res =
                    ipow(root, 6) + ipow(cplx(0.0, -sgn), 6);
                worst = std::max(worst, std::abs(res));
            }
        }
    } else if (parts.family == "even") {
        const int n = static_cast<int>(kv_get(parts.kv, "n"));
        // d^{2n}U/dt^{2n} = (-1)^n (-i b)^{2n} U with roots e^{i pi r/n}
        const double rhs_sign = (n % 2 ? -1.0 : 1.0);
        for (int r = 0; r < 2 * n; ++r) {
            const cplx root = -std::polar(1.0, M_PI * r / n);
            const cplx res = ipow(root, 2u * n) -
                             rhs_sign * ipow(cplx(0.0, -1.0), 2u * n);
            worst = std::max(worst, std::abs(res));
        }
    } else {
        throw std::invalid_argument("verify_pde_fourier: unknown descriptor " +
                                    descriptor);
    }

    return make_report("pde/fourier/" + descriptor, worst, 0.0, 1e-12,
                       "max residual over roots and beta grid, relative to "
                       "|beta|^order");
}

namespace {

double mixed_xt(const std::function<double(double, double)>& f, double x,
                double t, double h) {
    return (f(x + h, t + h) - f(x + h, t - h) - f(x - h, t + h) +
            f(x - h, t - h)) /
           (4.0 * h * h);
}

// normalised FD residual of the law's PDE at (x, t) for one step h
double fd_residual(const std::string& law, double x, double t, double h) {
    std::function<double(double, double)> f;
    int order = 0;
    bool mixed = false;
    double mixed_coeff = 0.0;
    if (law == "p4") {
        f = [](double xx, double tt) {
            return hyper_cauchy_pdf(xx, HyperCauchyParams(2, tt));
        };
        order = 4;
    } else if (law == "third") {
        f = [](double xx, double tt) { return third_order_pdf(xx, tt); };
        order = 3;
    } else if (law == "p6") {
        f = [](double xx, double tt) { return p6_pdf(xx, tt); };
        order = 6;
    } else if (law == "asym_m3") {
        f = [](double xx, double tt) {
            return asym_cauchy_pdf(xx, AsymCauchyParams::generic(3, tt));
        };
        order = 2;
        mixed = true;
        mixed_coeff = 2.0 * std::sin(M_PI / 6.0);
    } else {
        throw std::invalid_argument("verify_pde_fd: unknown law " + law);
    }

    const int max_offset = (order == 3) ? 2 : order / 2 + (order % 2);
    if (t - max_offset * h <= 0.0)
        throw std::runtime_error("verify_pde_fd: stencil leaves t > 0 domain");

    const double d_t = finite_difference(
        [&f, x](double tt) { return f(x, tt); }, order, t, h);
    const double d_x = finite_difference(
        [&f, t](double xx) { return f(xx, t); }, order, x, h);

    double residual, norm;
    if (!mixed) {
        residual = d_t + d_x;
        norm = std::max(std::abs(d_t), std::abs(d_x));
    } else {
        const double d_xt = mixed_coeff * mixed_xt(f, x, t, h);
        residual = d_t + d_x - d_xt;
        norm = std::max({std::abs(d_t), std::abs(d_x), std::abs(d_xt)});
    }
    return std::abs(residual) / norm;
}

}  // namespace

CheckReport verify_pde_fd(const std::string& law, double x, double t,
                          double h) {
    const double r1 = fd_residual(law, x, t, h);
    const double r2 = fd_residual(law, x, t, 0.5 * h);
    const double ratio = r1 / r2;
    const double order_emp = std::log2(ratio);
    CheckReport r = make_report(
        "pde/fd/" + law, r1, 0.0, 1e-2,
        "normalised residual at h=" + std::to_string(h) +
            "; shrink ratio under h/2 = " + std::to_string(ratio) +
            " (empirical order " + std::to_string(order_emp) + ")");
    r.passed = r.passed && order_emp > 1.5 && order_emp < 2.5;
    return r;
}

CheckReport verify_halfline_mass(int k, double t) {
    const auto p = AsymCauchyParams::composition(k, t);
    const QuadratureResult q = integrate_half_line(
        [&p](double x) { return asym_cauchy_pdf(x, p); }, 1e-10, 1e-10);
    const double expected = asym_halfline_mass(k);
    return make_report("halfline/k=" + std::to_string(k), q.value, expected,
                       1e-8);
}

CheckReport verify_airy_composition(double x, double t) {
    if (!(t > 0.0))
        throw std::domain_error("verify_airy_composition: t must be > 0");
    // After v = (3s)^{-1/3} the kernel composition becomes
    //   3 t int_0^inf v Ai(x v) Ai(t v) dv,
    // with the Airy factor in t cutting the integrand super-exponentially.
    const double vmax = 16.0 / t;
    const auto f = [x, t](double v) {
        return v * airy_ai(x * v) * airy_ai(t * v);
    };
    const QuadratureResult q =
        integrate_interval(f, 0.0, vmax, 1e-9, 1e-9, 60000);
    const double measured = 3.0 * t * q.value;
    const double expected = third_order_pdf(x, t);
    return make_report("airy/composition/x=" + std::to_string(x) +
                           ",t=" + std::to_string(t),
                       measured, expected, 1e-5);
}

CheckReport verify_bessel_product_integral(double y, double z) {
    if (!(y > 0.0) || !(z > 0.0))
        throw std::domain_error(
            "verify_bessel_product_integral: need y, z > 0");
    const double nu = 1.0 / 3.0;
    const auto f = [y, z](double s) {
        if (s <= 0.0) return 0.0;
        return s * bessel_k_third(y * s) * bessel_k_third(z * s);
    };
    const QuadratureResult q = integrate_half_line(f, 1e-12, 1e-10);
    double expected;
    std::string detail;
    if (std::abs(y - z) < 1e-9 * std::max(y, z)) {
        expected = M_PI * nu / (2.0 * std::sin(M_PI * nu) * z * z);
        detail = "y = z limit by l'Hopital";
    } else {
        expected = M_PI * std::pow(y * z, -nu) *
                   (std::pow(y, 2.0 * nu) - std::pow(z, 2.0 * nu)) /
                   (2.0 * std::sin(M_PI * nu) * (y * y - z * z));
        detail = "GR 6.521 product formula";
    }
    return make_report("bessel/product/y=" + std::to_string(y) +
                           ",z=" + std::to_string(z),
                       q.value, expected, 1e-6 * std::abs(expected), detail);
}

CheckReport verify_renorm_third_order(double x, double t) {
    if (!(x > 0.0) || !(t > 0.0))
        throw std::domain_error("verify_renorm_third_order: need x, t > 0");
    const double a = 2.0 * std::pow(x, 1.5) / std::pow(3.0, 1.5);
    const double b = 2.0 * std::pow(t, 1.5) / std::pow(3.0, 1.5);
    const auto f = [a, b](double s) {
        if (s <= 0.0) return 0.0;
        return s * bessel_k_third(a * s) * bessel_k_third(b * s);
    };
    const QuadratureResult q = integrate_half_line(f, 1e-12, 1e-10);
    const double measured =
        2.0 * std::sqrt(x * t * t * t) / (9.0 * M_PI * M_PI) * q.value;
    const double expected = third_order_pdf(x, t);
    return make_report("bessel/renorm3ord/x=" + std::to_string(x) +
                           ",t=" + std::to_string(t),
                       measured, expected, 1e-6 * expected,
                       "Bessel-product chain against the closed form");
}

CheckReport verify_initial_conditions(int k, double x) {
    if (k < 0 || k > 3)
        throw std::domain_error("verify_initial_conditions: k in [0,3]");
    if (x == 0.0)
        throw std::domain_error("verify_initial_conditions: x must be != 0");

    // cos(pi(k+1)/2) evaluated exactly: 0 for even k, (-1)^{(k+1)/2} else.
    double cosv = 0.0;
    if (k % 2 == 1) cosv = (((k + 1) / 2) % 2) ? -1.0 : 1.0;
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    const double expected = (k % 2 ? -1.0 : 1.0) * kfact * cosv /
                            (M_PI * std::pow(std::abs(x), k + 1.0));
    const double scale = kfact / (M_PI * std::pow(std::abs(x), k + 1.0));

    double measured;
    std::string detail;
    if (k == 0) {
        // delta condition: vanishing off the origin plus unit mass
        const double t0 = 1e-6 * std::abs(x);
        measured = cauchy_pdf(x, t0);
        const QuadratureResult q = integrate_real_line(
            [t0](double xx) { return cauchy_pdf(xx, t0); }, 1e-10, 1e-10);
        detail = "pointwise vanishing at t=1e-6|x|; mass = " +
                 std::to_string(q.value);
        CheckReport r = make_report("initial/k=0,x=" + std::to_string(x),
                                    measured, 0.0, 1e-3 * scale, detail);
        r.passed = r.passed && std::abs(q.value - 1.0) < 1e-8;
        return r;
    }

    const auto dk = [k, x](double t0) {
        return finite_difference(
            [x](double tt) { return cauchy_pdf(x, tt); }, k, t0, t0 / 4.0);
    };
    const double t0 = 0.1 * std::abs(x);
    // error is even in t0, so one Richardson step removes the t0^2 term
    measured = (4.0 * dk(0.5 * t0) - dk(t0)) / 3.0;
    detail = "Richardson-extrapolated t-derivative, t0=" + std::to_string(t0);
    return make_report("initial/k=" + std::to_string(k) +
                           ",x=" + std::to_string(x),
                       measured, expected, 1e-3 * scale, detail);
}

std::complex<double> fourier_transform_pdf(
    const std::function<double(double)>& pdf, double beta) {
    if (beta == 0.0) {
        const QuadratureResult q = integrate_real_line(pdf, 1e-10, 1e-10);
        return {q.value, 0.0};
    }
    const double ab = std::abs(beta);
    const double X = ab >= 0.1 ? 400.0 : 40.0 / ab;

    const auto re = integrate_interval(
        [&pdf, beta](double x) { return pdf(x) * std::cos(beta * x); }, -X, X,
        1e-9, 1e-10, 60000);
    const auto im = integrate_interval(
        [&pdf, beta](double x) { return pdf(x) * std::sin(beta * x); }, -X, X,
        1e-9, 1e-10, 60000);
    cplx result(re.value, im.value);

    // integration-by-parts tail: int_X^inf e^{ibx} f = e^{ibX} [ -f/(ib)
    // + f'/(ib)^2 - f''/(ib)^3 ] + O(int |f'''|/b^3)
    const auto tail = [](const std::function<double(double)>& f, double X0,
                         double b) {
        const double h = 0.5;
        const double f0 = f(X0);
        const double f1 = finite_difference(f, 1, X0, h);
        const double f2 = finite_difference(f, 2, X0, h);
        const cplx ib(0.0, b);
        return std::exp(ib * X0) * (-f0 / ib + f1 / (ib * ib) -
                                    f2 / (ib * ib * ib));
    };
    result += tail(pdf, X, beta);
    result += tail([&pdf](double y) { return pdf(-y); }, X, -beta);
    return result;
}

CheckReport verify_cf_match(const std::string& law,
                            std::span<const double> betas) {
    const auto pdf = law_pdf(law);
    const auto cf = law_cf(law);
    double worst = 0.0;
    for (double b : betas) {
        const cplx numeric = fourier_transform_pdf(pdf, b);
        worst = std::max(worst, std::abs(numeric - cf(b)));
    }
    return make_report("cf/" + law, worst, 0.0, 1e-6,
                       "max |numeric FT - closed CF| over beta grid of " +
                           std::to_string(betas.size()) + " points");
}

std::vector<CheckReport> run_suite(const std::string& filter) {
    std::vector<CheckReport> out;
    const auto want = [&filter](const char* suite) {
        return filter == "all" || filter == suite;
    };

    if (want("identity")) {
        for (int n = 2; n <= 6; ++n) {
            out.push_back(verify_product_identity(n, 1.0, 1.0));
            out.push_back(verify_product_identity(n, 1.7, 0.9));
            out.push_back(verify_product_identity(n, 0.3, 2.1));
        }
    }
    if (want("normalization")) {
        for (int n = 2; n <= 6; ++n)
            for (double t : {0.5, 1.0, 2.0})
                out.push_back(verify_normalization(
                    "hyper:n=" + std::to_string(n) + ",t=" + std::to_string(t)));
        out.push_back(verify_normalization("cauchy:t=1"));
        out.push_back(verify_normalization("third:t=1"));
        out.push_back(verify_normalization("p6:t=1"));
        for (int k : {1, 2, 3})
            out.push_back(
                verify_normalization("asym:k=" + std::to_string(k) + ",t=1"));
    }
    if (want("component")) {
        for (int n = 2; n <= 5; ++n)
            for (int k = 1; k <= (1 << (n - 1)) - 1; k += 2)
                out.push_back(verify_component_integral(n, k, 1.0));
        out.push_back(verify_component_integral(2, 1, 2.0));
    }
    if (want("pde")) {
        for (int n = 2; n <= 6; ++n)
            out.push_back(verify_pde_fourier("hyper:n=" + std::to_string(n)));
        for (int k : {1, 2, 3})
            out.push_back(verify_pde_fourier("odd:k=" + std::to_string(k)));
        out.push_back(verify_pde_fourier("p6"));
        for (int n = 1; n <= 6; ++n)
            out.push_back(verify_pde_fourier("even:n=" + std::to_string(n)));
        out.push_back(verify_pde_fd("p4", 0.5, 1.0, 0.05));
        out.push_back(verify_pde_fd("third", 0.3, 1.0, 0.05));
        out.push_back(verify_pde_fd("asym_m3", 0.2, 1.0, 0.05));
        out.push_back(verify_pde_fd("p6", 0.4, 1.0, 0.1));
    }
    if (want("halfline")) {
        for (int k = 1; k <= 6; ++k) out.push_back(verify_halfline_mass(k, 1.0));
    }
    if (want("airy")) {
        const QuadratureResult ai = integrate_half_line(
            [](double w) { return airy_ai(w); }, 1e-12, 1e-12);
        out.push_back(make_report("airy/half-line-integral", ai.value,
                                  1.0 / 3.0, 1e-8));
        for (auto [x, t] : {std::pair{0.0, 1.0}, {1.0, 1.0}, {-2.0, 1.0},
                            {0.5, 2.0}, {2.0, 1.0}})
            out.push_back(verify_airy_composition(x, t));
    }
    if (want("bessel")) {
        out.push_back(verify_bessel_product_integral(1.0, 2.0));
        out.push_back(verify_bessel_product_integral(1.5, 1.5));
        out.push_back(verify_renorm_third_order(2.0, 1.0));
    }
    if (want("initial")) {
        for (int k = 0; k <= 3; ++k) {
            out.push_back(verify_initial_conditions(k, 1.0));
            out.push_back(verify_initial_conditions(k, 2.0));
        }
    }
    if (want("cf")) {
        const std::vector<double> grid = {-5.0, -2.5, -1.0, -0.5, 0.0,
                                          0.5,  1.0,  2.5,  5.0};
        out.push_back(verify_cf_match("hyper:n=2,t=1", grid));
        out.push_back(verify_cf_match("third:t=1", grid));
        const std::vector<double> small = {-2.0, -1.0, 1.0, 2.0};
        out.push_back(verify_cf_match("hyper:n=3,t=1", small));
        out.push_back(verify_cf_match("p6:t=1", small));
        out.push_back(verify_cf_match("asym_m:m=3,t=1", small));
    }
    return out;
}

std::string report_json(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        arr.push_back({{"check_name", r.check_name},
                       {"passed", r.passed},
                       {"measured", r.measured},
                       {"expected", r.expected},
                       {"tolerance", r.tolerance},
                       {"detail", r.detail}});
    }
    return arr.dump(2);
}

std::string report_table(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    std::size_t n_pass = 0;
    for (const auto& r : reports) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << r.check_name
           << "  measured=" << r.measured << " expected=" << r.expected
           << " tol=" << r.tolerance;
        if (!r.detail.empty()) os << "  (" << r.detail << ")";
        os << '\n';
        if (r.passed) ++n_pass;
    }
    os << n_pass << "/" << reports.size() << " checks passed\n";
    return os.str();
}

}  // namespace hypercauchy
