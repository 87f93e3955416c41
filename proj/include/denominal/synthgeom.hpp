#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "denominal/datasetgen.hpp"
#include "denominal/vectors.hpp"

namespace denominal {

/// Root regions as spherical caps on the unit sphere.
struct SynthConfig {
    int n_roots = 60;
    int k_verbs = 4;
    int dim = 50;
    /// Angular radius of a root's region (radians).
    double region_radius = 0.5;
    /// Angular radius of the denominal's cap (radians).
    double denominal_noise = 0.1;
    std::uint64_t seed = 1;

    /// Throws InvalidConfig unless 0 < noise <= radius < pi/2, dim >= 3,
    /// n_roots >= 5 and 1 <= k_verbs <= 5.
    void validate() const;
    /// key = value lines, including the RNG name.
    std::string describe() const;
};

/// Name of the generator stream, recorded in output metadata.
inline constexpr const char* kSynthRng = "mt19937_64 per root, seeded by splitmix64(seed) stream";

struct SynthData {
    std::vector<DataPoint> points;
    EmbeddingSpace space;
};

/// Per root: a uniform center direction; the noun and the k root verbs
/// uniform over the cap of radius region_radius around it; the denominal
/// uniform over the cap of radius denominal_noise around the point at
/// fraction 1 - noise/radius of the arc from center to noun. With
/// noise == radius the denominal is one more independent draw from the
/// root's region. Tokens are r{i}_noun, r{i}_denom, r{i}_v{j}.
SynthData generate(const SynthConfig& config);

namespace synth_detail {

/// Deterministic RNG used by the generator.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    /// Uniform in [0, 1) from the top 53 bits.
    double uniform();
    /// Standard normal by Box-Muller.
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0;
    bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Unit vector whose angle to `axis` is uniform over the cap of angular radius `radius`.
std::vector<double> sample_cap(std::span<const double> axis, double radius, int dim, Rng& rng);

/// Angle between unit vectors.
double angle(std::span<const double> a, std::span<const double> b);

}  // namespace synth_detail

}  // namespace denominal
