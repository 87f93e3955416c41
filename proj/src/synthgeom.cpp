#include "denominal/synthgeom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "denominal/error.hpp"
#include "denominal/util.hpp"

namespace denominal {

void SynthConfig::validate() const {
    auto fail = [](const std::string& m) { throw Error(ErrorKind::InvalidConfig, m); };
    if (!(denominal_noise > 0)) fail("denominal_noise must be positive");
    if (!(denominal_noise <= region_radius)) fail("denominal_noise must not exceed region_radius");
    if (!(region_radius < std::numbers::pi / 2)) fail("region_radius must be below pi/2");
    if (dim < 3) fail("dim must be at least 3");
    if (n_roots < 5) fail("n_roots must be at least 5");
    if (k_verbs < 1 || k_verbs > static_cast<int>(DataPoint::kMaxRootVerbs)) fail("k_verbs must be 1-5");
}

std::string SynthConfig::describe() const {
    std::string out;
    out += "n_roots = " + std::to_string(n_roots) + "\n";
    out += "k_verbs = " + std::to_string(k_verbs) + "\n";
    out += "dim = " + std::to_string(dim) + "\n";
    out += "region_radius = " + util::format_double(region_radius, 17) + "\n";
    out += "denominal_noise = " + util::format_double(denominal_noise, 17) + "\n";
    out += "seed = " + std::to_string(seed) + "\n";
    out += std::string("rng = ") + kSynthRng + "\n";
    return out;
}

namespace synth_detail {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2 * std::numbers::pi * u2);
    has_spare_ = true;
    return r * std::cos(2 * std::numbers::pi * u2);
}

namespace {

// Inverse CDF of the polar angle of a point uniform on the cap of radius
// rho in R^dim: density proportional to sin^(dim-2)(theta) on [0, rho].
class CapAngle {
public:
    CapAngle(int dim, double rho) : rho_(rho), cdf_(kGrid + 1, 0.0) {
        const double m = dim - 2;
        const double log_top = std::log(std::sin(rho));
        auto f = [&](double t) { return t <= 0 ? 0.0 : std::exp(m * (std::log(std::sin(t)) - log_top)); };
        const double h = rho / kGrid;
        for (int i = 1; i <= kGrid; ++i) {
            // Simpson on each cell.
            const double a = (i - 1) * h, b = i * h;
            cdf_[i] = cdf_[i - 1] + h / 6 * (f(a) + 4 * f((a + b) / 2) + f(b));
        }
        for (auto& c : cdf_) c /= cdf_.back();
    }

    double operator()(double u) const {
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        const auto i = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(it - cdf_.begin(), 1, kGrid));
        const double lo = cdf_[i - 1], hi = cdf_[i];
        const double frac = hi > lo ? (u - lo) / (hi - lo) : 0.0;
        return std::min(rho_, (static_cast<double>(i - 1) + frac) * rho_ / kGrid);
    }

private:
    static constexpr int kGrid = 4096;
    double rho_;
    std::vector<double> cdf_;
};

const CapAngle& cap_angle(int dim, double rho) {
    static std::mutex mutex;
    static std::map<std::pair<int, double>, CapAngle> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find({dim, rho});
    if (it == cache.end()) it = cache.emplace(std::make_pair(dim, rho), CapAngle(dim, rho)).first;
    return it->second;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void normalize(std::vector<double>& v) {
    const double n = std::sqrt(dot(v, v));
    for (auto& x : v) x /= n;
}

std::vector<double> random_unit(int dim, Rng& rng) {
    std::vector<double> v(static_cast<std::size_t>(dim));
    do {
        for (auto& x : v) x = rng.normal();
    } while (dot(v, v) == 0);
    normalize(v);
    return v;
}

// Unit vector orthogonal to `axis`.
std::vector<double> random_tangent(std::span<const double> axis, int dim, Rng& rng) {
    for (;;) {
        auto v = random_unit(dim, rng);
        const double p = dot(v, axis);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= p * axis[i];
        if (dot(v, v) > 1e-12) {
            normalize(v);
            return v;
        }
    }
}

// Point at fraction t along the great circle from a to b.
std::vector<double> slerp(std::span<const double> a, std::span<const double> b, double t) {
    const double omega = angle(a, b);
    std::vector<double> out(a.size());
    if (omega < 1e-12) {
        std::copy(a.begin(), a.end(), out.begin());
        return out;
    }
    const double wa = std::sin((1 - t) * omega) / std::sin(omega);
    const double wb = std::sin(t * omega) / std::sin(omega);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = wa * a[i] + wb * b[i];
    normalize(out);
    return out;
}

}  // namespace

double angle(std::span<const double> a, std::span<const double> b) {
    return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

std::vector<double> sample_cap(std::span<const double> axis, double radius, int dim, Rng& rng) {
    const double theta = cap_angle(dim, radius)(rng.uniform());
    const auto u = random_tangent(axis, dim, rng);
    std::vector<double> out(axis.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::cos(theta) * axis[i] + std::sin(theta) * u[i];
    normalize(out);
    return out;
}

}  // namespace synth_detail

SynthData generate(const SynthConfig& config) {
    using namespace synth_detail;
    config.validate();
    const auto n = static_cast<std::size_t>(config.n_roots);
    const auto k = static_cast<std::size_t>(config.k_verbs);

    std::vector<std::uint64_t> sub_seeds(n);
    std::uint64_t stream = config.seed;
    for (auto& s : sub_seeds) s = splitmix64(stream);

    // Per-root vectors: noun, denominal, then k verbs.
    std::vector<std::vector<std::vector<double>>> vectors(n);
    const auto nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ii = 0; ii < nn; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        Rng rng(sub_seeds[i]);
        const auto center = random_unit(config.dim, rng);
        auto noun = sample_cap(center, config.region_radius, config.dim, rng);
        const auto anchor = slerp(center, noun, 1 - config.denominal_noise / config.region_radius);
        auto denom = sample_cap(anchor, config.denominal_noise, config.dim, rng);
        vectors[i].push_back(std::move(noun));
        vectors[i].push_back(std::move(denom));
        for (std::size_t j = 0; j < k; ++j) vectors[i].push_back(sample_cap(center, config.region_radius, config.dim, rng));
    }

    SynthData out{{}, EmbeddingSpace(static_cast<std::size_t>(config.dim), "synth")};
    for (std::size_t i = 0; i < n; ++i) {
        const auto tag = std::to_string(i);
        const Root root({"r", tag});
        DataPoint p;
        p.root = root;
        p.noun = {"r" + tag + "_noun", {"synth_noun", root}};
        p.noun_lookup_form = p.noun.text;
        p.denominal = {"r" + tag + "_denom", {"synth_denominal", Root({"r", tag, kUnknownTemplatic})}};
        p.status = ReviewStatus::Kept;
        out.space.add(p.noun.text, vectors[i][0]);
        out.space.add(p.denominal.text, vectors[i][1]);
        for (std::size_t j = 0; j < k; ++j) {
            SurfaceForm verb{"r" + tag + "_v" + std::to_string(j), {"", root}};
            out.space.add(verb.text, vectors[i][2 + j]);
            p.root_verbs.push_back(std::move(verb));
        }
        p.check();
        out.points.push_back(std::move(p));
    }
    return out;
}

}  // namespace denominal
