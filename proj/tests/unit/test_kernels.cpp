#include <gtest/gtest.h>

#include <random>

#include "denominal/kernels.hpp"
#include "oracles/oracles.hpp"

using namespace denominal;

namespace {

std::vector<double> random_matrix(std::size_t n, std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<double> x(n * d);
    for (auto& v : x) v = g(rng);
    return x;
}

std::vector<double> mean_of(const std::vector<double>& x, std::size_t n, std::size_t d) {
    std::vector<double> m(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[j] += x[i * d + j] / static_cast<double>(n);
    }
    return m;
}

}  // namespace

TEST(Kernels, CovarianceAndGramParallelEqualsSerial) {
    std::mt19937_64 rng(1);
    for (auto [n, d] : {std::pair<std::size_t, std::size_t>{5, 3}, {40, 17}, {9, 60}}) {
        auto x = random_matrix(n, d, rng);
        auto m = mean_of(x, n, d);
        EXPECT_EQ(kernels::serial::covariance(x, n, d, m), kernels::parallel::covariance(x, n, d, m));
        EXPECT_EQ(kernels::serial::gram(x, n, d, m), kernels::parallel::gram(x, n, d, m));
        EXPECT_EQ(kernels::serial::cosine_gram(x, n, d), kernels::parallel::cosine_gram(x, n, d));
    }
}

TEST(Kernels, CovarianceMatchesDefinition) {
    std::vector<double> x{1, 2, 3, 4, 5, 9};  // 3 x 2
    std::vector<double> m{3, 5};
    auto c = kernels::serial::covariance(x, 3, 2, m);
    EXPECT_DOUBLE_EQ(c[0], 4.0);
    EXPECT_DOUBLE_EQ(c[1], 7.0);
    EXPECT_DOUBLE_EQ(c[3], 13.0);
}

TEST(Kernels, DominanceMatchesOracle) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t na = 1 + rng() % 40, nb = 1 + rng() % 40;
        std::vector<double> a(na), b(nb);
        // small integer range forces ties
        for (auto& v : a) v = static_cast<double>(rng() % 7);
        for (auto& v : b) v = static_cast<double>(rng() % 7);
        const auto s = kernels::serial::dominance_counts(a, b);
        EXPECT_EQ(s, kernels::parallel::dominance_counts(a, b));
        EXPECT_EQ(s.greater - s.less, oracles::cliffs_numerator(a, b));
    }
}

TEST(Kernels, SignEnumerationParallelEqualsSerial) {
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 18; ++n) {
        std::vector<std::int64_t> w(n);
        for (auto& v : w) v = 1 + static_cast<std::int64_t>(rng() % 20);
        std::int64_t total = 0;
        for (auto v : w) total += v;
        for (std::int64_t t : {std::int64_t{-1}, std::int64_t{0}, total / 3, total / 2, total, total + 1}) {
            EXPECT_EQ(kernels::serial::sign_enumeration_count(w, t), kernels::parallel::sign_enumeration_count(w, t))
                << n << " " << t;
        }
    }
}

TEST(Kernels, SignEnumerationEdgeCases) {
    std::vector<std::int64_t> w{2, 4, 6};
    EXPECT_EQ(kernels::parallel::sign_enumeration_count(w, 12), 1u);
    EXPECT_EQ(kernels::parallel::sign_enumeration_count(w, 0), 8u);
    EXPECT_EQ(kernels::parallel::sign_enumeration_count({}, 0), 1u);
}
