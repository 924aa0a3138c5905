#include "hypercauchy/sampling.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "hypercauchy/numerics.hpp"

namespace hypercauchy {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

RngState::RngState(std::uint64_t seed_) : seed(seed_) {
    std::uint64_t sm = seed_;
    for (auto& word : s_) word = splitmix64(sm);
}

std::uint64_t RngState::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngState::next_uniform() {
    // 53-bit mantissa shifted into the open interval (0, 1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

RngState RngState::substream(std::uint64_t index) const {
    std::uint64_t sm = seed;
    const std::uint64_t base = splitmix64(sm);
    return RngState(base ^ (index * 0x9e3779b97f4a7c15ULL + 0x3c6ef372fe94f82aULL));
}

std::string SampleBatch::to_csv() const {
    std::string out = "# law=" + law_descriptor + " seed=" +
                      std::to_string(seed) + " rng=" + RngState::algorithm +
                      " size=" + std::to_string(values.size()) + "\n";
    out += "value\n";
    for (double v : values) {
        out += format_double(v);
        out += '\n';
    }
    return out;
}

std::string SampleBatch::to_json() const {
    nlohmann::json j;
    j["law"] = law_descriptor;
    j["seed"] = seed;
    j["rng"] = RngState::algorithm;
    j["size"] = values.size();
    j["values"] = values;
    return j.dump();
}

double sample_cauchy(double location, double scale, RngState& rng) {
    if (!(scale > 0.0))
        throw std::domain_error("sample_cauchy: scale must be > 0");
    return location + scale * std::tan(M_PI * (rng.next_uniform() - 0.5));
}

double sample_folded(const ComponentSpec& c, RngState& rng) {
    const double draw = sample_cauchy(0.0, c.cauchy_scale, rng);
    return std::abs(draw - c.cauchy_location);
}

double sample_symmetrized(const ComponentSpec& c, RngState& rng) {
    const double w1 = sample_folded(c, rng);
    const double w2 = sample_folded(c, rng);
    return 0.5 * (w1 - w2);
}

double sample_component_exact(const ComponentSpec& c, RngState& rng) {
    const double sign = (rng.next_u64() & 1ULL) ? 1.0 : -1.0;
    return sample_cauchy(sign * c.cauchy_location, c.cauchy_scale, rng);
}

double sample_hyper_cauchy(const HyperCauchyParams& p, RngState& rng) {
    const std::uint64_t count = 1ULL << (p.n - 2);
    // rejection-free uniform index via 64-bit multiply-shift
    const std::uint64_t idx =
        static_cast<std::uint64_t>((static_cast<__uint128_t>(rng.next_u64()) *
                                    count) >> 64);
    const ComponentSpec c = make_component(p.n, static_cast<int>(2 * idx + 1),
                                           p.t);
    return sample_component_exact(c, rng);
}

double sample_asym_cauchy(const AsymCauchyParams& p, RngState& rng) {
    return sample_cauchy(p.location, p.scale, rng);
}

double sample_third_order(double t, RngState& rng) {
    if (!(t > 0.0)) throw std::domain_error("sample_third_order: t must be > 0");
    return sample_cauchy(-0.5 * t, std::sqrt(3.0) / 2.0 * t, rng);
}

double sample_stable13(double t, RngState& rng) {
    if (!(t > 0.0)) throw std::domain_error("sample_stable13: t must be > 0");
    const double alpha = 1.0 / 3.0;
    const double u = M_PI * rng.next_uniform();
    const double w = -std::log(rng.next_uniform());  // Exp(1)
    // Kanter: S = (A/W)^{(1-alpha)/alpha} has Laplace transform e^{-l^alpha}
    const double a = std::sin((1.0 - alpha) * u) *
                     std::pow(std::sin(alpha * u), alpha / (1.0 - alpha)) /
                     std::pow(std::sin(u), 1.0 / (1.0 - alpha));
    const double s1 = std::pow(a / w, (1.0 - alpha) / alpha);
    return t * t * t * s1;  // self-similar scaling, 1/alpha = 3
}

SampleBatch make_batch(std::size_t n, std::uint64_t seed,
                       const std::string& law_descriptor,
                       const std::function<double(RngState&)>& draw) {
    SampleBatch batch;
    batch.seed = seed;
    batch.law_descriptor = law_descriptor;
    batch.values.reserve(n);
    RngState rng(seed);
    for (std::size_t i = 0; i < n; ++i) batch.values.push_back(draw(rng));
    return batch;
}

double ks_statistic(const SampleBatch& batch,
                    const std::function<double(double)>& cdf) {
    return ks_statistic(std::span<const double>(batch.values), cdf);
}

}  // namespace hypercauchy
