#include "denominal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "denominal/error.hpp"

namespace denominal {

void fix_sign(double* v, std::size_t n, double eps) {
    for (std::size_t i = 0; i < n; ++i) {
        if (std::fabs(v[i]) > eps) {
            if (v[i] < 0) {
                for (std::size_t j = 0; j < n; ++j) v[j] = -v[j];
            }
            return;
        }
    }
}

SymmetricEigen jacobi_eigen(std::vector<double> a, std::size_t n, double tolerance, int max_sweeps) {
    if (a.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "matrix is not n x n");
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    // v holds eigenvectors as columns while rotating.
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    double norm = 0;
    for (double x : a) norm += x * x;
    norm = std::sqrt(norm);

    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) s += 2 * at(i, j) * at(i, j);
        }
        return std::sqrt(s);
    };

    // One extra sweep after reaching the tolerance: convergence is quadratic,
    // so it takes the residual to rounding level for the price of a sweep.
    bool polished = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double off = off_norm();
        if (off == 0) break;
        if (off <= tolerance * norm) {
            if (polished) break;
            polished = true;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = at(q, p) = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p], vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return at(i, i) > at(j, j); });

    SymmetricEigen out;
    out.n = n;
    out.values.resize(n);
    out.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = at(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors[k * n + i] = v[i * n + order[k]];
        fix_sign(&out.vectors[k * n], n);
    }
    return out;
}

}  // namespace denominal
