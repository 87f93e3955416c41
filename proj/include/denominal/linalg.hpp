#pragma once

#include <cstddef>
#include <vector>

namespace denominal {

/// Eigenpairs of a symmetric matrix.
struct SymmetricEigen {
    std::size_t n = 0;
    /// Descending.
    std::vector<double> values;
    /// Row k (length n) is the unit eigenvector for values[k]; its first
    /// entry with magnitude above 1e-12 is positive.
    std::vector<double> vectors;
};

/// Cyclic Jacobi rotations on a row-major symmetric n x n matrix, until the
/// off-diagonal Frobenius norm is at most `tolerance` times the matrix
/// norm (plus one polishing sweep). Deterministic for a given input.
SymmetricEigen jacobi_eigen(std::vector<double> a, std::size_t n, double tolerance = 1e-10, int max_sweeps = 100);

/// Makes the first entry with |v| > eps positive.
void fix_sign(double* v, std::size_t n, double eps = 1e-12);

}  // namespace denominal
