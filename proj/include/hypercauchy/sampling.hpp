#ifndef HYPERCAUCHY_SAMPLING_HPP
#define HYPERCAUCHY_SAMPLING_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypercauchy/distributions.hpp"

namespace hypercauchy {

/// xoshiro256++ generator state, seeded via splitmix64. Identical seeds
/// yield identical streams; substream(i) derives independent streams
/// deterministically for parallel batch generation.
struct RngState {
    explicit RngState(std::uint64_t seed);

    std::uint64_t next_u64();
    /// uniform double strictly inside (0, 1)
    double next_uniform();
    RngState substream(std::uint64_t index) const;

    std::uint64_t seed;
    static constexpr const char* algorithm = "xoshiro256++";

  private:
    std::uint64_t s_[4];
};

/// A reproducible batch of draws plus the metadata needed to replay it.
struct SampleBatch {
    std::vector<double> values;
    std::uint64_t seed = 0;
    std::string law_descriptor;

    std::size_t size() const { return values.size(); }
    /// one value per line, header comment carries law tag / seed / rng
    std::string to_csv() const;
    std::string to_json() const;
};

// ---- generators ---------------------------------------------------------

/// location + scale * tan(pi (U - 1/2))
double sample_cauchy(double location, double scale, RngState& rng);

/// W = | C(t cos(k pi/2^n)) - t sin(k pi/2^n) |, distributed per the
/// folded component density.
double sample_folded(const ComponentSpec& c, RngState& rng);

/// Z = (W1 - W2)/2 for independent folded draws; distributed per the
/// symmetrised component density h_k.
double sample_symmetrized(const ComponentSpec& c, RngState& rng);

/// Exact two-Cauchy mixture draw for h_k: fair sign, then
/// Cauchy(+-t sin(k pi/2^n), t cos(k pi/2^n)).
double sample_component_exact(const ComponentSpec& c, RngState& rng);

/// Uniform choice over the odd-k components, then an exact component
/// draw.
double sample_hyper_cauchy(const HyperCauchyParams& p, RngState& rng);

double sample_asym_cauchy(const AsymCauchyParams& p, RngState& rng);

/// Third-order law: Cauchy(location -t/2, scale sqrt(3) t / 2).
double sample_third_order(double t, RngState& rng);

/// One-sided stable subordinator of index 1/3 at time t (Kanter's
/// transform: uniform angle plus exponential), always positive.
double sample_stable13(double t, RngState& rng);

/// Runs `draw` n times from a fresh RngState(seed) and packages the
/// result with metadata.
SampleBatch make_batch(std::size_t n, std::uint64_t seed,
                       const std::string& law_descriptor,
                       const std::function<double(RngState&)>& draw);

/// KS statistic of a batch against a reference CDF.
double ks_statistic(const SampleBatch& batch,
                    const std::function<double(double)>& cdf);

}  // namespace hypercauchy

#endif
