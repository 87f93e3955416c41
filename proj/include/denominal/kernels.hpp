#pragma once

// Data-parallel inner loops. Each kernel exists twice: `serial` is the plain
// reference loop, `parallel` the OpenMP version the library calls. Both
// return identical results (integer counts exactly; floating sums are
// accumulated per output cell in the same order).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace denominal::kernels {

/// a_i > b_j and a_i < b_j pair counts.
struct Dominance {
    std::int64_t greater = 0;
    std::int64_t less = 0;
    bool operator==(const Dominance&) const = default;
};

namespace serial {

/// Sample covariance (divisor n-1) of n row-major rows of width d around `mean`; d x d.
std::vector<double> covariance(std::span<const double> x, std::size_t n, std::size_t d, std::span<const double> mean);
/// Centered Gram matrix (x_i - mean).(x_j - mean) / (n-1); n x n.
std::vector<double> gram(std::span<const double> x, std::size_t n, std::size_t d, std::span<const double> mean);
/// Cosine similarities between rows; n x n. Rows must be nonzero.
std::vector<double> cosine_gram(std::span<const double> x, std::size_t n, std::size_t d);
Dominance dominance_counts(std::span<const double> a, std::span<const double> b);
/// Number of subsets of `weights` whose sum is >= threshold (2^n patterns, n <= 40).
std::uint64_t sign_enumeration_count(std::span<const std::int64_t> weights, std::int64_t threshold);

}  // namespace serial

namespace parallel {

std::vector<double> covariance(std::span<const double> x, std::size_t n, std::size_t d, std::span<const double> mean);
std::vector<double> gram(std::span<const double> x, std::size_t n, std::size_t d, std::span<const double> mean);
std::vector<double> cosine_gram(std::span<const double> x, std::size_t n, std::size_t d);
Dominance dominance_counts(std::span<const double> a, std::span<const double> b);
std::uint64_t sign_enumeration_count(std::span<const std::int64_t> weights, std::int64_t threshold);

}  // namespace parallel

}  // namespace denominal::kernels
