#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sscag {

// Dense row-major matrix. Row-major layout is assumed throughout the repo.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    bool all_finite() const;
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Compressed sparse row matrix. Column indices are sorted within each row.
struct SparseMatrix {
    std::size_t nrows = 0;
    std::size_t ncols = 0;
    std::vector<std::int64_t> row_ptr;  // size nrows + 1
    std::vector<std::int32_t> col;      // size nnz
    std::vector<double> val;            // size nnz

    std::size_t rows() const { return nrows; }
    std::size_t cols() const { return ncols; }
    std::size_t nnz() const { return col.size(); }

    struct Triplet {
        std::int32_t r;
        std::int32_t c;
        double v;
    };

    // Builds CSR from triplets; duplicate (r,c) entries are summed.
    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<Triplet> entries);

    SparseMatrix transposed() const;

    // Row sums, length nrows.
    std::vector<double> row_sums() const;
};

// out = S * M. Deterministic for any worker count: each output row is
// accumulated serially in column order.
DenseMatrix spmm(const SparseMatrix& s, const DenseMatrix& m);

// out = A * B for dense A, B.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

// out = A^T * B. Rows of A/B are folded chunk by chunk in a fixed order so the
// result does not depend on the worker count.
DenseMatrix matmul_at_b(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix densify(const SparseMatrix& s);

DenseMatrix transpose(const DenseMatrix& a);

// ||A - B||_max
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

double frobenius_norm(const DenseMatrix& a);

}  // namespace sscag
