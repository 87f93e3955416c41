#include "denominal/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "denominal/error.hpp"
#include "denominal/kernels.hpp"
#include "denominal/linalg.hpp"

namespace denominal {

namespace {

// Relative size below which an eigenvalue is treated as zero.
constexpr double kRankTolerance = 1e-12;

std::vector<double> column_mean(const Matrix& x) {
    std::vector<double> mean(x.cols, 0.0);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) mean[j] += x(i, j);
    }
    for (auto& m : mean) m /= static_cast<double>(x.rows);
    return mean;
}

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

// Fills rows [filled, k) of `comps` with unit vectors orthogonal to all
// previous rows, taken from the standard basis by Gram-Schmidt.
void complete_basis(Matrix& comps, std::size_t filled) {
    const std::size_t d = comps.cols;
    std::size_t e = 0;
    std::vector<double> cand(d);
    for (std::size_t r = filled; r < comps.rows; ++r) {
        for (; e < d; ++e) {
            std::fill(cand.begin(), cand.end(), 0.0);
            cand[e] = 1;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t q = 0; q < r; ++q) {
                    const double* c = &comps.data[q * d];
                    const double proj = dot(cand.data(), c, d);
                    for (std::size_t j = 0; j < d; ++j) cand[j] -= proj * c[j];
                }
            }
            const double norm = std::sqrt(dot(cand.data(), cand.data(), d));
            if (norm > 1e-6) {
                for (std::size_t j = 0; j < d; ++j) comps(r, j) = cand[j] / norm;
                fix_sign(&comps.data[r * d], d);
                ++e;
                break;
            }
        }
    }
}

}  // namespace

std::vector<double> PcaModel::project(std::span<const double> x, std::size_t k) const {
    const std::size_t d = dim();
    if (x.size() != d) throw Error(ErrorKind::DimensionMismatch, "row width differs from the fitted dimension");
    k = std::min(k, this->k());
    std::vector<double> centered(d);
    for (std::size_t j = 0; j < d; ++j) centered[j] = x[j] - mean[j];
    std::vector<double> out(k);
    for (std::size_t c = 0; c < k; ++c) out[c] = dot(&components.data[c * d], centered.data(), d);
    return out;
}

std::vector<double> PcaModel::reconstruct(std::span<const double> scores) const {
    const std::size_t d = dim();
    std::vector<double> out(mean);
    for (std::size_t c = 0; c < scores.size() && c < k(); ++c) {
        for (std::size_t j = 0; j < d; ++j) out[j] += scores[c] * components(c, j);
    }
    return out;
}

PcaModel pca_fit(const Matrix& x) {
    const std::size_t n = x.rows, d = x.cols;
    if (n < 2 || d == 0) throw Error(ErrorKind::DegenerateInput, "PCA needs at least 2 rows");
    for (double v : x.data) {
        if (!std::isfinite(v)) throw Error(ErrorKind::DegenerateInput, "PCA input has a non-finite value");
    }
    PcaModel model;
    model.mean = column_mean(x);
    const std::size_t k = std::min(n - 1, d);
    model.components = Matrix(k, d);

    if (n - 1 >= d) {
        const auto cov = kernels::parallel::covariance(x.data, n, d, model.mean);
        model.total_variance = 0;
        for (std::size_t j = 0; j < d; ++j) model.total_variance += cov[j * d + j];
        const auto eig = jacobi_eigen(cov, d);
        for (std::size_t c = 0; c < k; ++c) {
            model.eigenvalues.push_back(std::max(eig.values[c], 0.0));
            std::copy_n(&eig.vectors[c * d], d, &model.components.data[c * d]);
        }
    } else {
        const auto gram = kernels::parallel::gram(x.data, n, d, model.mean);
        model.total_variance = 0;
        for (std::size_t i = 0; i < n; ++i) model.total_variance += gram[i * n + i];
        const auto eig = jacobi_eigen(gram, n);
        const double top = std::max(eig.values[0], 0.0);
        std::size_t filled = 0;
        // component_c = Xc^T u_c / sqrt((n-1) lambda_c)
        for (std::size_t c = 0; c < k; ++c) {
            const double lambda = std::max(eig.values[c], 0.0);
            model.eigenvalues.push_back(lambda);
            if (lambda <= kRankTolerance * top || lambda == 0) continue;
            const double scale = 1 / std::sqrt(static_cast<double>(n - 1) * lambda);
            double* comp = &model.components.data[c * d];
            for (std::size_t i = 0; i < n; ++i) {
                const double u = eig.vectors[c * n + i] * scale;
                for (std::size_t j = 0; j < d; ++j) comp[j] += u * (x(i, j) - model.mean[j]);
            }
            fix_sign(comp, d);
            filled = c + 1;
        }
        // Rank-deficient input: the remaining axes span the null space.
        for (std::size_t c = filled; c < k; ++c) model.eigenvalues[c] = 0;
        complete_basis(model.components, filled);
    }
    if (!(model.total_variance > 0)) throw Error(ErrorKind::DegenerateInput, "all rows are identical");
    for (double lambda : model.eigenvalues) model.explained_variance_ratio.push_back(lambda / model.total_variance);
    return model;
}

std::size_t guttman_kaiser_dim(std::span<const double> eigenvalues) {
    if (eigenvalues.empty()) return 1;
    const double mean = std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0) / static_cast<double>(eigenvalues.size());
    const auto above = static_cast<std::size_t>(
        std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double v) { return v > mean; }));
    return std::max<std::size_t>(above, 1);
}

Reduction reduce(const Matrix& rows, std::optional<std::size_t> force_dim) {
    Reduction out;
    out.model = pca_fit(rows);
    out.dim = force_dim ? std::clamp<std::size_t>(*force_dim, 1, out.model.k()) : guttman_kaiser_dim(out.model.eigenvalues);
    out.rows = Matrix(rows.rows, out.dim);
    for (std::size_t i = 0; i < rows.rows; ++i) {
        auto scores = out.model.project(rows.row(i), out.dim);
        std::copy(scores.begin(), scores.end(), &out.rows.data[i * out.dim]);
    }
    return out;
}

Matrix project2d_cosine_kernel(const Matrix& rows) {
    const std::size_t n = rows.rows;
    if (n < 3) throw Error(ErrorKind::DegenerateInput, "cosine-kernel projection needs at least 3 vectors");
    auto g = kernels::parallel::cosine_gram(rows.data, n, rows.cols);
    std::vector<double> row_mean(n, 0.0);
    double grand = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) row_mean[i] += g[i * n + j];
        grand += row_mean[i];
        row_mean[i] /= static_cast<double>(n);
    }
    grand /= static_cast<double>(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) g[i * n + j] += grand - row_mean[i] - row_mean[j];
    }
    const auto eig = jacobi_eigen(g, n);
    Matrix out(n, 2);
    for (std::size_t axis = 0; axis < 2; ++axis) {
        const double scale = std::sqrt(std::max(eig.values[axis], 0.0));
        for (std::size_t i = 0; i < n; ++i) out(i, axis) = eig.vectors[axis * n + i] * scale;
    }
    for (std::size_t axis = 0; axis < 2; ++axis) {
        for (std::size_t i = 0; i < n; ++i) {
            if (std::fabs(out(i, axis)) > 1e-12) {
                if (out(i, axis) < 0) {
                    for (std::size_t r = 0; r < n; ++r) out(r, axis) = -out(r, axis);
                }
                break;
            }
        }
    }
    return out;
}

}  // namespace denominal
