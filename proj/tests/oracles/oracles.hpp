#pragma once

// Straightforward reference implementations, written independently of the
// library so that tests compare two routes to the same number.

#include <cstdint>
#include <vector>

namespace oracles {

/// Exact one-tailed (">") signed-rank p value by recursing over every sign
/// assignment of the nonzero differences. Ranks are recomputed from scratch
/// with a quadratic average-rank loop.
double wilcoxon_exact_p(const std::vector<double>& diffs);

/// W+ with average ranks, zeros dropped.
double wilcoxon_w_plus(const std::vector<double>& diffs);

/// delta numerator sum sign(x_i - y_j) by a double loop.
long long cliffs_numerator(const std::vector<double>& x, const std::vector<double>& y);

/// Eigenvalues of a symmetric matrix (row-major, n x n), descending, via Eigen.
std::vector<double> symmetric_eigenvalues(const std::vector<double>& a, int n);

/// Eigen's eigenvalues of the sample covariance of an n x d row-major matrix.
std::vector<double> covariance_eigenvalues(const std::vector<double>& x, int n, int d);

/// Regularized incomplete beta by its power series, accurate for x < (a+1)/(a+b+2).
double incomplete_beta_series(double a, double b, double x);

}  // namespace oracles
