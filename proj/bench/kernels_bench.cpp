#include <benchmark/benchmark.h>

#include <random>

#include "denominal/kernels.hpp"
#include "denominal/synthgeom.hpp"
#include "denominal/hypotheses.hpp"

using namespace denominal;

namespace {

std::vector<double> random_rows(std::size_t n, std::size_t d, std::uint64_t seed = 1) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<double> x(n * d);
    for (auto& v : x) v = g(rng);
    return x;
}

std::vector<double> column_mean(const std::vector<double>& x, std::size_t n, std::size_t d) {
    std::vector<double> m(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[j] += x[i * d + j] / static_cast<double>(n);
    }
    return m;
}

template <auto Fn>
void BM_Covariance(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0)), d = static_cast<std::size_t>(state.range(1));
    const auto x = random_rows(n, d);
    const auto m = column_mean(x, n, d);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(x, n, d, m));
}

template <auto Fn>
void BM_CosineGram(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = random_rows(n, 300);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(x, n, 300));
}

template <auto Fn>
void BM_Dominance(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_rows(n, 1, 1), b = random_rows(n, 1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(a, b));
}

template <auto Fn>
void BM_SignEnumeration(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<std::int64_t> w(n);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += w[i] = static_cast<std::int64_t>(2 * (i + 1));
    for (auto _ : state) benchmark::DoNotOptimize(Fn(w, total * 2 / 3));
}

void BM_SynthSuite(benchmark::State& state) {
    SynthConfig cfg;
    cfg.n_roots = static_cast<int>(state.range(0));
    cfg.dim = 300;
    const auto data = generate(cfg);
    for (auto _ : state) benchmark::DoNotOptimize(run_suite(data.points, data.space));
}

}  // namespace

BENCHMARK(BM_Covariance<kernels::serial::covariance>)->Args({200, 100})->Args({2000, 300});
BENCHMARK(BM_Covariance<kernels::parallel::covariance>)->Args({200, 100})->Args({2000, 300});
BENCHMARK(BM_CosineGram<kernels::serial::cosine_gram>)->Arg(100)->Arg(1000);
BENCHMARK(BM_CosineGram<kernels::parallel::cosine_gram>)->Arg(100)->Arg(1000);
BENCHMARK(BM_Dominance<kernels::serial::dominance_counts>)->Arg(100)->Arg(5000);
BENCHMARK(BM_Dominance<kernels::parallel::dominance_counts>)->Arg(100)->Arg(5000);
BENCHMARK(BM_SignEnumeration<kernels::serial::sign_enumeration_count>)->Arg(16)->Arg(24);
BENCHMARK(BM_SignEnumeration<kernels::parallel::sign_enumeration_count>)->Arg(16)->Arg(24)->Arg(32);
BENCHMARK(BM_SynthSuite)->Arg(60)->Arg(300)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
