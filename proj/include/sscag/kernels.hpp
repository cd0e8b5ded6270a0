#pragma once

#include <vector>

#include "sscag/matrix.hpp"

namespace sscag {

struct QrResult {
    DenseMatrix q;            // n x r, orthonormal columns
    int replaced_columns = 0; // rank-deficient columns refreshed with random data
};

// Householder QR of an n x r matrix (r <= n), returning the thin Q factor.
// Columns that collapse below the deficiency threshold are replaced by
// deterministic random vectors and re-orthonormalized; the count is reported.
QrResult qr_orthonormalize(const DenseMatrix& h);

struct SvdResult {
    DenseMatrix u;             // r x r, orthogonal
    std::vector<double> sigma; // nonincreasing, nonnegative
    DenseMatrix v;             // c x r, orthonormal columns
};

// SVD of a short-and-wide matrix (r x c with r <= c, r small) via one-sided
// Jacobi on the transpose. M = U diag(sigma) V^T.
SvdResult small_svd(const DenseMatrix& m);

struct EigResult {
    std::vector<double> values; // sorted by |value| descending
    DenseMatrix vectors;        // n x n, column i pairs with values[i]
};

// Full spectral decomposition of a symmetric matrix by cyclic Jacobi sweeps.
// Test oracle: intended for n <= 500, fails fast on asymmetric input.
EigResult dense_eig_oracle(const DenseMatrix& m);

}  // namespace sscag
