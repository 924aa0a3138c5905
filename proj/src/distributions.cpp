#include "hypercauchy/distributions.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hypercauchy/numerics.hpp"

namespace hypercauchy {

namespace {

// Per-n trig tables for the component sum, shared across threads.
struct ComponentTable {
    std::vector<double> cos_theta;      // cos(k pi/2^n), odd k
    std::vector<double> cos_two_theta;  // cos(k pi/2^{n-1})
};

std::shared_ptr<const ComponentTable> component_table(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const ComponentTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto tab = std::make_shared<ComponentTable>();
    const int count = 1 << (n - 2);
    tab->cos_theta.reserve(count);
    tab->cos_two_theta.reserve(count);
    const double step = M_PI / std::ldexp(1.0, n);
    for (int i = 0; i < count; ++i) {
        const double theta = (2 * i + 1) * step;
        tab->cos_theta.push_back(std::cos(theta));
        tab->cos_two_theta.push_back(std::cos(2.0 * theta));
    }
    cache[n] = tab;
    return tab;
}

void check_odd_k(int n, int k) {
    if (k < 1 || k > (1 << (n - 1)) - 1 || k % 2 == 0)
        throw std::domain_error(
            "component index k must be odd and within [1, 2^{n-1}-1]");
}

double pow2(int e) { return std::ldexp(1.0, e); }

}  // namespace

HyperCauchyParams::HyperCauchyParams(int n_, double t_) : n(n_), t(t_) {
    if (n < 2 || n > 24)
        throw std::domain_error("HyperCauchyParams: n must be in [2, 24]");
    if (!(t > 0.0))
        throw std::domain_error("HyperCauchyParams: t must be > 0");
}

AsymCauchyParams AsymCauchyParams::composition(int k, double t) {
    if (k < 1) throw std::domain_error("asym composition: k must be >= 1");
    if (!(t > 0.0)) throw std::domain_error("asym composition: t must be > 0");
    const double phi = M_PI / (2.0 * (2.0 * k + 1.0));
    AsymCauchyParams p;
    p.k = k;
    p.t = t;
    p.location = (k % 2 ? -1.0 : 1.0) * t * std::sin(phi);
    p.scale = t * std::cos(phi);
    return p;
}

AsymCauchyParams AsymCauchyParams::generic(int m, double t) {
    if (m < 2) throw std::domain_error("asym generic: m must be >= 2");
    if (!(t > 0.0)) throw std::domain_error("asym generic: t must be > 0");
    const double phi = M_PI / (2.0 * m);
    AsymCauchyParams p;
    p.m = m;
    p.t = t;
    p.location = -t * std::sin(phi);
    p.scale = t * std::cos(phi);
    return p;
}

double cauchy_pdf(double x, double t) {
    if (!(t > 0.0)) throw std::domain_error("cauchy_pdf: t must be > 0");
    return t / (M_PI * (x * x + t * t));
}

double cauchy_cdf(double x, double t) {
    if (!(t > 0.0)) throw std::domain_error("cauchy_cdf: t must be > 0");
    return 0.5 + std::atan(x / t) / M_PI;
}

double cauchy_pdf_ls(double x, double location, double scale) {
    if (!(scale > 0.0))
        throw std::domain_error("cauchy_pdf_ls: scale must be > 0");
    const double d = x - location;
    return scale / (M_PI * (d * d + scale * scale));
}

double cauchy_cdf_ls(double x, double location, double scale) {
    if (!(scale > 0.0))
        throw std::domain_error("cauchy_cdf_ls: scale must be > 0");
    return 0.5 + std::atan((x - location) / scale) / M_PI;
}

ComponentSpec make_component(int n, int k, double t) {
    HyperCauchyParams p(n, t);  // validates n, t
    check_odd_k(n, k);
    ComponentSpec c;
    c.k = k;
    c.angle = k * M_PI / std::ldexp(1.0, n);
    c.weight = 1.0 / pow2(n - 2);
    c.cauchy_location = t * std::sin(c.angle);
    c.cauchy_scale = t * std::cos(c.angle);
    c.t = t;
    return c;
}

std::vector<ComponentSpec> component_specs(const HyperCauchyParams& p) {
    std::vector<ComponentSpec> out;
    out.reserve(p.component_count());
    for (int k = 1; k <= (1 << (p.n - 1)) - 1; k += 2)
        out.push_back(make_component(p.n, k, p.t));
    return out;
}

double hyper_cauchy_pdf(double x, const HyperCauchyParams& p) {
    const auto tab = component_table(p.n);
    const double x2 = x * x, t2 = p.t * p.t;
    const double a = x2 * x2 + t2 * t2;
    const double b = 2.0 * x2 * t2;
    double sum = 0.0;
    const std::size_t count = tab->cos_theta.size();
    for (std::size_t i = 0; i < count; ++i)
        sum += tab->cos_theta[i] / (a + b * tab->cos_two_theta[i]);
    return p.t * (x2 + t2) * sum / (pow2(p.n - 2) * M_PI);
}

double hyper_cauchy_pdf_complex(double x, const HyperCauchyParams& p) {
    if (p.n > 6)
        throw std::domain_error("hyper_cauchy_pdf_complex: n must be <= 6");
    using cplx = std::complex<double>;
    const double step = M_PI / std::ldexp(1.0, p.n);
    cplx sum(0.0, 0.0);
    const int kmax = (1 << (p.n - 1)) - 1;
    for (int k = -kmax; k <= kmax; k += 2) {
        const cplx z = std::polar(p.t, k * step);  // t e^{i pi k/2^n}
        sum += z / (x * x + z * z);
    }
    sum /= M_PI * pow2(p.n - 1);
    if (std::abs(sum.imag()) > 1e-9 * std::abs(sum.real()))
        throw std::runtime_error(
            "hyper_cauchy_pdf_complex: imaginary residue did not cancel");
    return sum.real();
}

double hyper_cauchy_pdf_product(double x, const HyperCauchyParams& p) {
    if (p.n > 6)
        throw std::domain_error("hyper_cauchy_pdf_product: n must be <= 6");
    const double big = std::max(std::abs(x), p.t);
    if (big > 1.0 && std::ldexp(1.0, p.n) * std::log10(big) > 100.0)
        throw std::range_error(
            "hyper_cauchy_pdf_product: |x| or t too large for the x^{2^n} "
            "denominator");
    const double n2 = std::ldexp(1.0, p.n);
    const double x2 = x * x, t2 = p.t * p.t;
    const double denom = std::pow(std::abs(x), n2) + std::pow(p.t, n2);
    const int kmax = (1 << (p.n - 1)) - 1;
    double sum = 0.0;
    for (int k = 1; k <= kmax; k += 2) {
        double prod = 1.0;  // empty product (n = 2) is 1
        for (int j = 1; j <= kmax; j += 2) {
            if (j == k) continue;
            prod *= x2 * x2 + t2 * t2 +
                    2.0 * x2 * t2 * std::cos(j * M_PI / std::ldexp(1.0, p.n - 1));
        }
        sum += std::cos(k * M_PI / std::ldexp(1.0, p.n)) * prod;
    }
    return p.t * (x2 + t2) * sum / (pow2(p.n - 2) * M_PI * denom);
}

double hyper_cauchy_pdf_regrouped(double x, const HyperCauchyParams& p) {
    if (p.n < 3)
        throw std::domain_error(
            "hyper_cauchy_pdf_regrouped: pairing requires n >= 3");
    const double x2 = x * x, t2 = p.t * p.t;
    const double a = x2 * x2 + t2 * t2;
    const double b = 2.0 * x2 * t2;
    const double step = M_PI / std::ldexp(1.0, p.n);
    double sum = 0.0;
    for (int k = 1; k <= (1 << (p.n - 2)) - 1; k += 2) {
        const double theta = k * step;
        sum += std::sin(theta) / (a - b * std::cos(2.0 * theta)) +
               std::cos(theta) / (a + b * std::cos(2.0 * theta));
    }
    return p.t * (x2 + t2) * sum / (pow2(p.n - 2) * M_PI);
}

double hyper_cauchy_cf(double beta, const HyperCauchyParams& p) {
    const auto tab = component_table(p.n);
    const double tb = p.t * std::abs(beta);
    const double step = M_PI / std::ldexp(1.0, p.n);
    double sum = 0.0;
    for (std::size_t i = 0; i < tab->cos_theta.size(); ++i) {
        const double theta = (2.0 * i + 1.0) * step;
        sum += std::exp(-tb * tab->cos_theta[i]) * std::cos(tb * std::sin(theta));
    }
    return sum / pow2(p.n - 2);
}

double hyper_cauchy_cdf(double x, const HyperCauchyParams& p) {
    const auto specs = component_specs(p);
    double acc = 0.0;
    for (const auto& c : specs)
        acc += c.weight * 0.5 *
               (cauchy_cdf_ls(x, -c.cauchy_location, c.cauchy_scale) +
                cauchy_cdf_ls(x, c.cauchy_location, c.cauchy_scale));
    return acc;
}

std::vector<double> find_modes(const HyperCauchyParams& p) {
    const double m = find_local_max(
        [&p](double x) { return hyper_cauchy_pdf(x, p); }, 0.0, 10.0 * p.t,
        1e-9);
    return {-m, m};
}

double component_pdf(double w, const ComponentSpec& c) {
    const double w2 = w * w, t2 = c.t * c.t;
    const double cos2 = std::cos(2.0 * c.angle);
    return c.t * (w2 + t2) * std::cos(c.angle) /
           (M_PI * (w2 * w2 + t2 * t2 + 2.0 * w2 * t2 * cos2));
}

double component_cdf(double w, const ComponentSpec& c) {
    return 0.5 * (cauchy_cdf_ls(w, -c.cauchy_location, c.cauchy_scale) +
                  cauchy_cdf_ls(w, c.cauchy_location, c.cauchy_scale));
}

double folded_pdf(double w, const ComponentSpec& c) {
    if (w < 0.0) throw std::domain_error("folded_pdf: requires w >= 0");
    return 2.0 * component_pdf(w, c);
}

double folded_cdf(double w, const ComponentSpec& c) {
    if (w < 0.0) throw std::domain_error("folded_cdf: requires w >= 0");
    return component_cdf(w, c) - component_cdf(-w, c);
}

double disturbance_g(double x, double t, int k, int n) {
    if (n < 2) throw std::domain_error("disturbance_g: n must be >= 2");
    check_odd_k(n, k);
    const double x2 = x * x, t2 = t * t;
    const double q = x2 * x2 + t2 * t2;
    const double b = 2.0 * x2 * t2;
    return (q + b) / (q + b * std::cos(k * M_PI / std::ldexp(1.0, n - 1)));
}

double asym_cauchy_pdf(double x, const AsymCauchyParams& p) {
    return cauchy_pdf_ls(x, p.location, p.scale);
}

double asym_cauchy_cdf(double x, const AsymCauchyParams& p) {
    return cauchy_cdf_ls(x, p.location, p.scale);
}

double asym_halfline_mass(int k) {
    if (k < 1) throw std::domain_error("asym_halfline_mass: k must be >= 1");
    const double sign = (k % 2 ? -1.0 : 1.0);
    return 0.5 * (1.0 + sign / (2.0 * k + 1.0));
}

double third_order_pdf(double x, double t) {
    if (!(t > 0.0)) throw std::domain_error("third_order_pdf: t must be > 0");
    return std::sqrt(3.0) / (2.0 * M_PI) * t / (x * x + x * t + t * t);
}

double third_order_cdf(double x, double t) {
    return cauchy_cdf_ls(x, -0.5 * t, std::sqrt(3.0) / 2.0 * t);
}

std::complex<double> third_order_cf(double beta, double t) {
    const double mod = std::exp(-std::sqrt(3.0) / 2.0 * t * std::abs(beta));
    return std::polar(mod, -0.5 * t * beta);
}

double p6_pdf(double x, double t) {
    if (!(t > 0.0)) throw std::domain_error("p6_pdf: t must be > 0");
    const double c6 = std::cos(M_PI / 6.0);  // sqrt(3)/2
    const double s6 = std::sin(M_PI / 6.0);  // 1/2
    const double x2 = x * x, t2 = t * t;
    const double num = (x2 + t2) * c6 + x * t;
    const double core = x2 + t2 + x * t * c6;
    const double den = core * core - 3.0 * x2 * t2 * s6 * s6;
    return std::sqrt(3.0) / (2.0 * M_PI) * t * num / den;
}

double p6_pdf_complex(double x, double t) {
    if (!(t > 0.0)) throw std::domain_error("p6_pdf_complex: t must be > 0");
    using cplx = std::complex<double>;
    auto term = [x](cplx tau) {
        const cplx d = (x + 0.5 * tau) * (x + 0.5 * tau) + 0.75 * tau * tau;
        return std::sqrt(3.0) / 2.0 * tau / d;
    };
    const cplx sum = term(std::polar(t, M_PI / 6.0)) +
                     term(std::polar(t, -M_PI / 6.0));
    return sum.real() / (2.0 * M_PI);
}

}  // namespace hypercauchy
