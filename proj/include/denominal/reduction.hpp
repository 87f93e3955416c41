#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace denominal {

/// Row-major dense matrix.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
};

struct PcaModel {
    std::vector<double> mean;
    /// K x D; row k is the k-th principal axis.
    Matrix components;
    /// K covariance eigenvalues, non-increasing.
    std::vector<double> eigenvalues;
    std::vector<double> explained_variance_ratio;
    double total_variance = 0;

    std::size_t dim() const { return mean.size(); }
    std::size_t k() const { return eigenvalues.size(); }

    /// Scores of x on the first `k` components.
    std::vector<double> project(std::span<const double> x, std::size_t k) const;
    /// mean + sum_k scores_k * component_k.
    std::vector<double> reconstruct(std::span<const double> scores) const;
};

/// Covariance PCA keeping K = min(n-1, D) components. Uses the D x D
/// covariance when n-1 >= D and the n x n Gram matrix otherwise; zero-variance
/// directions of the Gram route are completed to an orthonormal set.
/// Throws DegenerateInput when n < 2 or every direction has zero variance.
PcaModel pca_fit(const Matrix& rows);

/// Number of eigenvalues strictly above their mean, at least 1.
std::size_t guttman_kaiser_dim(std::span<const double> eigenvalues);

struct Reduction {
    PcaModel model;
    std::size_t dim = 0;
    /// n x dim scores.
    Matrix rows;
};

/// pca_fit then projection on guttman_kaiser_dim components, or on
/// `force_dim` (clamped to K) when given.
Reduction reduce(const Matrix& rows, std::optional<std::size_t> force_dim = std::nullopt);

/// 2-D layout of a handful of vectors: top two eigenpairs of the
/// double-centered cosine Gram matrix, coordinates v * sqrt(lambda), each
/// axis signed so its first nonzero coordinate is positive. n x 2.
/// Throws DegenerateInput for n < 3 and ZeroVector.
Matrix project2d_cosine_kernel(const Matrix& rows);

}  // namespace denominal
