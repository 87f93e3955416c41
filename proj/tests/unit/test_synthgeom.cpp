#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "denominal/error.hpp"
#include "denominal/hypotheses.hpp"
#include "denominal/synthgeom.hpp"

using namespace denominal;
using synth_detail::angle;

namespace {

std::vector<double> vec(const SynthData& d, const std::string& token) {
    auto v = *d.space.lookup(token);
    return {v.begin(), v.end()};
}

double norm(const std::vector<double>& v) {
    return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

TEST(Synth, ShapeAndTokens) {
    SynthConfig cfg;
    cfg.n_roots = 7;
    cfg.k_verbs = 3;
    cfg.dim = 12;
    auto d = generate(cfg);
    ASSERT_EQ(d.points.size(), 7u);
    EXPECT_EQ(d.space.size(), 7u * 5);
    EXPECT_EQ(d.space.dim(), 12u);
    const auto& p = d.points[2];
    EXPECT_EQ(p.noun.text, "r2_noun");
    EXPECT_EQ(p.denominal.text, "r2_denom");
    ASSERT_EQ(p.root_verbs.size(), 3u);
    EXPECT_EQ(p.root_verbs[2].text, "r2_v2");
    EXPECT_EQ(p.status, ReviewStatus::Kept);
    EXPECT_NO_THROW(p.check());
    for (std::size_t i = 0; i < d.space.size(); ++i) {
        auto r = d.space.row(i);
        EXPECT_NEAR(norm({r.begin(), r.end()}), 1.0, 1e-12);
    }
}

TEST(Synth, GeometryBounds) {
    SynthConfig cfg;
    cfg.n_roots = 30;
    cfg.region_radius = 0.4;
    cfg.denominal_noise = 0.05;
    auto d = generate(cfg);
    for (const auto& p : d.points) {
        const auto noun = vec(d, p.noun.text);
        // everything in one cap of radius r: pairwise angles at most 2r
        for (const auto& v : p.root_verbs) EXPECT_LE(angle(noun, vec(d, v.text)), 2 * 0.4 + 1e-12);
        // anchor within noise of the noun, denominal within noise of the anchor
        EXPECT_LE(angle(noun, vec(d, p.denominal.text)), 2 * 0.05 + 1e-12);
    }
}

TEST(Synth, Deterministic) {
    SynthConfig cfg;
    cfg.n_roots = 10;
    auto a = generate(cfg), b = generate(cfg);
    EXPECT_EQ(a.space.to_word2vec_text(), b.space.to_word2vec_text());
    cfg.seed = 2;
    EXPECT_NE(generate(cfg).space.to_word2vec_text(), a.space.to_word2vec_text());
}

TEST(Synth, InvalidConfig) {
    auto kind = [](SynthConfig c) {
        try {
            c.validate();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    SynthConfig c;
    EXPECT_EQ(kind(c), ErrorKind::Io);
    auto bad = c;
    bad.denominal_noise = 0;
    EXPECT_EQ(kind(bad), ErrorKind::InvalidConfig);
    bad = c;
    bad.denominal_noise = 0.6;
    EXPECT_EQ(kind(bad), ErrorKind::InvalidConfig);
    bad = c;
    bad.region_radius = 1.6;
    bad.denominal_noise = 0.1;
    EXPECT_EQ(kind(bad), ErrorKind::InvalidConfig);
    bad = c;
    bad.dim = 2;
    EXPECT_EQ(kind(bad), ErrorKind::InvalidConfig);
    bad = c;
    bad.k_verbs = 6;
    EXPECT_EQ(kind(bad), ErrorKind::InvalidConfig);
    bad = c;
    bad.n_roots = 4;
    EXPECT_EQ(kind(bad), ErrorKind::InvalidConfig);
    EXPECT_THROW(generate(bad), Error);
}

TEST(Synth, DescribeListsRng) {
    auto text = SynthConfig{}.describe();
    EXPECT_NE(text.find("n_roots = 60\n"), std::string::npos);
    EXPECT_NE(text.find(kSynthRng), std::string::npos);
}

TEST(Cap, AngleLawInThreeDimensions) {
    synth_detail::Rng rng(42);
    const std::vector<double> axis{0, 0, 1};
    const double r = 0.8;
    const int n = 40000;
    int inner = 0;
    for (int i = 0; i < n; ++i) {
        auto v = synth_detail::sample_cap(axis, r, 3, rng);
        const double a = angle(axis, v);
        ASSERT_LE(a, r + 1e-12);
        if (a <= r / 2) ++inner;
    }
    // on S^2 the cap area grows as 1 - cos(t)
    const double expected = (1 - std::cos(r / 2)) / (1 - std::cos(r));
    const double se = std::sqrt(expected * (1 - expected) / n);
    EXPECT_NEAR(static_cast<double>(inner) / n, expected, 5 * se);
}

TEST(Cap, RotationallySymmetric) {
    synth_detail::Rng rng(43);
    const int dim = 20;
    std::vector<double> axis(dim, 0.0);
    axis[3] = 1;
    std::vector<double> mean(dim, 0.0);
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        auto v = synth_detail::sample_cap(axis, 0.5, dim, rng);
        for (int j = 0; j < dim; ++j) mean[j] += v[j] / n;
    }
    for (int j = 0; j < dim; ++j) {
        if (j != 3) EXPECT_NEAR(mean[j], 0.0, 0.01);
    }
    // E[cos t] under the density sin^(dim-2) t on [0, 0.5]
    double mass = 0;
    const int cells = 100000;
    for (int i = 0; i < cells; ++i) mass += std::pow(std::sin((i + 0.5) * 0.5 / cells), dim - 2) * 0.5 / cells;
    const double expected = std::pow(std::sin(0.5), dim - 1) / (dim - 1) / mass;
    EXPECT_NEAR(mean[3], expected, 1e-3);
}

TEST(Synth, SmallNoiseGivesPositiveDifferences) {
    SynthConfig cfg;
    cfg.denominal_noise = 0.01;
    auto d = generate(cfg);
    int positive = 0;
    for (const auto& r : similarity_records(d.points, d.space)) positive += r.d_h1 > 0;
    EXPECT_GE(positive, 57);
}

TEST(Synth, NullDenominalIsExchangeableWithRootVerbs) {
    // with noise == radius the denominal is one more draw from the region:
    // the rank of its cosine to the noun among the k+1 is uniform
    std::vector<int> counts(5, 0);
    double sum_h2 = 0;
    int total = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        SynthConfig cfg;
        cfg.seed = seed;
        cfg.denominal_noise = cfg.region_radius;
        auto d = generate(cfg);
        for (const auto& r : similarity_records(d.points, d.space)) {
            int rank = 0;
            for (double s : r.s_root) rank += s < r.s_denom;
            ++counts[rank];
            sum_h2 += r.d_h2;
            ++total;
        }
    }
    const double e = total / 5.0;
    double chi2 = 0;
    for (int c : counts) chi2 += (c - e) * (c - e) / e;
    // 4 degrees of freedom, 0.999 quantile
    EXPECT_LT(chi2, 18.47);
    EXPECT_LT(sum_h2 / total, 0.0);
}

TEST(Synth, PlantedEffectMostlyPositive) {
    auto d = generate(SynthConfig{});
    auto recs = similarity_records(d.points, d.space);
    int positive = 0;
    for (const auto& r : recs) positive += r.d_h1 > 0;
    EXPECT_GE(positive, static_cast<int>(0.95 * recs.size()));
}
