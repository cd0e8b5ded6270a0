#include "sscag/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sscag/rng.hpp"
#include "sscag/threading.hpp"

namespace sscag {

bool DenseMatrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> entries) {
    for (const Triplet& t : entries) {
        if (t.r < 0 || static_cast<std::size_t>(t.r) >= rows || t.c < 0 ||
            static_cast<std::size_t>(t.c) >= cols)
            throw std::invalid_argument("sparse triplet index out of range");
    }
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.r != b.r ? a.r < b.r : a.c < b.c;
    });

    SparseMatrix s;
    s.nrows = rows;
    s.ncols = cols;
    s.row_ptr.assign(rows + 1, 0);
    s.col.reserve(entries.size());
    s.val.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < entries.size() && entries[j].r == entries[i].r && entries[j].c == entries[i].c) {
            sum += entries[j].v;
            ++j;
        }
        s.col.push_back(entries[i].c);
        s.val.push_back(sum);
        s.row_ptr[entries[i].r + 1]++;
        i = j;
    }
    for (std::size_t r = 0; r < rows; ++r) s.row_ptr[r + 1] += s.row_ptr[r];
    return s;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t;
    t.nrows = ncols;
    t.ncols = nrows;
    t.row_ptr.assign(ncols + 1, 0);
    t.col.resize(nnz());
    t.val.resize(nnz());
    for (std::int32_t c : col) t.row_ptr[c + 1]++;
    for (std::size_t r = 0; r < ncols; ++r) t.row_ptr[r + 1] += t.row_ptr[r];
    std::vector<std::int64_t> next(t.row_ptr.begin(), t.row_ptr.end() - 1);
    for (std::size_t r = 0; r < nrows; ++r) {
        for (std::int64_t p = row_ptr[r]; p < row_ptr[r + 1]; ++p) {
            const std::int64_t q = next[col[p]]++;
            t.col[q] = static_cast<std::int32_t>(r);
            t.val[q] = val[p];
        }
    }
    return t;
}

std::vector<double> SparseMatrix::row_sums() const {
    std::vector<double> s(nrows, 0.0);
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::int64_t p = row_ptr[r]; p < row_ptr[r + 1]; ++p) s[r] += val[p];
    return s;
}

DenseMatrix spmm(const SparseMatrix& s, const DenseMatrix& m) {
    if (s.cols() != m.rows()) throw std::invalid_argument("spmm: shape mismatch");
    DenseMatrix out(s.rows(), m.cols());
    const std::int64_t n = static_cast<std::int64_t>(s.rows());
    const std::size_t r = m.cols();
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        double* dst = out.row(static_cast<std::size_t>(i));
        for (std::int64_t p = s.row_ptr[i]; p < s.row_ptr[i + 1]; ++p) {
            const double v = s.val[p];
            const double* src = m.row(static_cast<std::size_t>(s.col[p]));
            for (std::size_t j = 0; j < r; ++j) dst[j] += v * src[j];
        }
    }
    return out;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    DenseMatrix out(a.rows(), b.cols());
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    const std::size_t inner = a.cols();
    const std::size_t r = b.cols();
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        double* dst = out.row(static_cast<std::size_t>(i));
        const double* ai = a.row(static_cast<std::size_t>(i));
        for (std::size_t t = 0; t < inner; ++t) {
            const double v = ai[t];
            if (v == 0.0) continue;
            const double* bt = b.row(t);
            for (std::size_t j = 0; j < r; ++j) dst[j] += v * bt[j];
        }
    }
    return out;
}

namespace {
constexpr std::size_t kReductionChunks = 64;
}

DenseMatrix matmul_at_b(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("matmul_at_b: shape mismatch");
    const std::size_t n = a.rows();
    const std::size_t p = a.cols();
    const std::size_t q = b.cols();
    const std::size_t chunks = std::min(kReductionChunks, std::max<std::size_t>(n, 1));
    std::vector<DenseMatrix> partial(chunks, DenseMatrix(p, q));
    const std::size_t step = (n + chunks - 1) / chunks;
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        DenseMatrix& acc = partial[static_cast<std::size_t>(c)];
        const std::size_t lo = static_cast<std::size_t>(c) * step;
        const std::size_t hi = std::min(n, lo + step);
        for (std::size_t i = lo; i < hi; ++i) {
            const double* ai = a.row(i);
            const double* bi = b.row(i);
            for (std::size_t t = 0; t < p; ++t) {
                const double v = ai[t];
                if (v == 0.0) continue;
                double* dst = acc.row(t);
                for (std::size_t j = 0; j < q; ++j) dst[j] += v * bi[j];
            }
        }
    }
    DenseMatrix out(p, q);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::vector<double>& src = partial[c].values();
        std::vector<double>& dst = out.values();
        for (std::size_t t = 0; t < dst.size(); ++t) dst[t] += src[t];
    }
    return out;
}

DenseMatrix densify(const SparseMatrix& s) {
    DenseMatrix out(s.rows(), s.cols());
    for (std::size_t r = 0; r < s.rows(); ++r)
        for (std::int64_t p = s.row_ptr[r]; p < s.row_ptr[r + 1]; ++p)
            out(r, static_cast<std::size_t>(s.col[p])) = s.val[p];
    return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t t = 0; t < a.values().size(); ++t)
        m = std::max(m, std::fabs(a.values()[t] - b.values()[t]));
    return m;
}

double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (double v : a.values()) s += v * v;
    return std::sqrt(s);
}

DenseMatrix sample_gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("sample_gaussian: empty shape");
    DenseMatrix out(rows, cols);
    GaussianSampler g(seed);
    for (double& v : out.values()) v = g.next();
    return out;
}

}  // namespace sscag
