#include "sscag/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sscag/rng.hpp"

namespace sscag {

namespace {

double column_norm(const DenseMatrix& a, std::size_t j, std::size_t from) {
    double s = 0.0;
    for (std::size_t i = from; i < a.rows(); ++i) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

QrResult qr_orthonormalize(const DenseMatrix& h) {
    const std::size_t n = h.rows();
    const std::size_t r = h.cols();
    if (r > n) throw std::invalid_argument("qr_orthonormalize: more columns than rows");
    if (!h.all_finite()) throw std::invalid_argument("qr_orthonormalize: non-finite input");

    DenseMatrix a = h;
    double scale = 0.0;
    for (std::size_t j = 0; j < r; ++j) scale = std::max(scale, column_norm(a, j, 0));
    const double deficiency_tol = 1e-12 * scale;

    QrResult res;
    std::vector<std::vector<double>> vs(r);
    std::vector<double> betas(r, 0.0);
    GaussianSampler refresh(0x5eedc01u);

    for (std::size_t j = 0; j < r; ++j) {
        double norm = column_norm(a, j, j);
        if (norm <= deficiency_tol) {
            // Column lies in the span of the previous ones (or is zero):
            // refresh it with deterministic random data.
            do {
                for (std::size_t i = j; i < n; ++i) a(i, j) = refresh.next();
                norm = column_norm(a, j, j);
            } while (norm == 0.0);
            res.replaced_columns++;
        }

        std::vector<double>& v = vs[j];
        v.resize(n - j);
        const double x0 = a(j, j);
        const double alpha = x0 >= 0.0 ? -norm : norm;
        v[0] = x0 - alpha;
        for (std::size_t i = j + 1; i < n; ++i) v[i - j] = a(i, j);
        double vtv = 0.0;
        for (double e : v) vtv += e * e;
        betas[j] = vtv > 0.0 ? 2.0 / vtv : 0.0;

        a(j, j) = alpha;
        const double beta = betas[j];
        const std::int64_t rem = static_cast<std::int64_t>(r - j) - 1;
#pragma omp parallel for schedule(static)
        for (std::int64_t cc = 0; cc < rem; ++cc) {
            const std::size_t c = j + 1 + static_cast<std::size_t>(cc);
            double w = 0.0;
            for (std::size_t i = j; i < n; ++i) w += v[i - j] * a(i, c);
            w *= beta;
            for (std::size_t i = j; i < n; ++i) a(i, c) -= w * v[i - j];
        }
    }

    // Accumulate Q = Q_0 ... Q_{r-1} applied to the first r columns of I.
    DenseMatrix q(n, r);
    for (std::size_t j = 0; j < r; ++j) q(j, j) = 1.0;
    for (std::size_t jj = r; jj-- > 0;) {
        const std::vector<double>& v = vs[jj];
        const double beta = betas[jj];
#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(r); ++c) {
            double w = 0.0;
            for (std::size_t i = jj; i < n; ++i) w += v[i - jj] * q(i, static_cast<std::size_t>(c));
            w *= beta;
            for (std::size_t i = jj; i < n; ++i) q(i, static_cast<std::size_t>(c)) -= w * v[i - jj];
        }
    }
    res.q = std::move(q);
    return res;
}

SvdResult small_svd(const DenseMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    if (r > c) throw std::invalid_argument("small_svd: expects rows <= cols");
    if (!m.all_finite()) throw std::invalid_argument("small_svd: non-finite input");

    // One-sided Jacobi on the transpose: rotate column pairs of A = M^T until
    // all columns are mutually orthogonal.
    DenseMatrix a = transpose(m);  // c x r
    DenseMatrix u(r, r);
    for (std::size_t i = 0; i < r; ++i) u(i, i) = 1.0;

    const int max_sweeps = 60;
    const double tol = 1e-15;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < r; ++p) {
            for (std::size_t q = p + 1; q < r; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t i = 0; i < c; ++i) {
                    const double x = a(i, p), y = a(i, q);
                    app += x * x;
                    aqq += y * y;
                    apq += x * y;
                }
                if (std::fabs(apq) <= tol * std::sqrt(app * aqq) || apq == 0.0) continue;
                rotated = true;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                for (std::size_t i = 0; i < c; ++i) {
                    const double x = a(i, p), y = a(i, q);
                    a(i, p) = cs * x - sn * y;
                    a(i, q) = sn * x + cs * y;
                }
                for (std::size_t i = 0; i < r; ++i) {
                    const double x = u(i, p), y = u(i, q);
                    u(i, p) = cs * x - sn * y;
                    u(i, q) = sn * x + cs * y;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(r, 0.0);
    for (std::size_t j = 0; j < r; ++j) sigma[j] = column_norm(a, j, 0);

    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    SvdResult res;
    res.u = DenseMatrix(r, r);
    res.v = DenseMatrix(c, r);
    res.sigma.resize(r);
    double smax = 0.0;
    for (double s : sigma) smax = std::max(smax, s);
    const double null_tol = smax * 1e-14;
    GaussianSampler refresh(0x5eedc02u);
    for (std::size_t jj = 0; jj < r; ++jj) {
        const std::size_t src = order[jj];
        res.sigma[jj] = sigma[src];
        for (std::size_t i = 0; i < r; ++i) res.u(i, jj) = u(i, src);
        if (sigma[src] > null_tol && sigma[src] > 0.0) {
            for (std::size_t i = 0; i < c; ++i) res.v(i, jj) = a(i, src) / sigma[src];
        } else {
            // Null direction: complete V with a random unit vector kept
            // orthogonal to the columns already placed.
            res.sigma[jj] = 0.0;
            for (int attempt = 0; attempt < 8; ++attempt) {
                for (std::size_t i = 0; i < c; ++i) res.v(i, jj) = refresh.next();
                for (int pass = 0; pass < 2; ++pass) {
                    for (std::size_t prev = 0; prev < jj; ++prev) {
                        double dot = 0.0;
                        for (std::size_t i = 0; i < c; ++i) dot += res.v(i, jj) * res.v(i, prev);
                        for (std::size_t i = 0; i < c; ++i) res.v(i, jj) -= dot * res.v(i, prev);
                    }
                }
                const double nn = column_norm(res.v, jj, 0);
                if (nn > 1e-8) {
                    for (std::size_t i = 0; i < c; ++i) res.v(i, jj) /= nn;
                    break;
                }
            }
        }
    }
    return res;
}

EigResult dense_eig_oracle(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("dense_eig_oracle: not square");
    double scale = std::max(1.0, m.max_abs());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::fabs(m(i, j) - m(j, i)) > 1e-10 * scale)
                throw std::invalid_argument("dense_eig_oracle: asymmetric input");

    DenseMatrix a = m;
    DenseMatrix vmat(n, n);
    for (std::size_t i = 0; i < n; ++i) vmat(i, i) = 1.0;

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (std::sqrt(off) <= 1e-14 * std::max(1.0, scale)) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = cs * aip - sn * aiq;
                    a(i, q) = sn * aip + cs * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a(p, i), aqi = a(q, i);
                    a(p, i) = cs * api - sn * aqi;
                    a(q, i) = sn * api + cs * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = vmat(i, p), viq = vmat(i, q);
                    vmat(i, p) = cs * vip - sn * viq;
                    vmat(i, q) = sn * vip + cs * viq;
                }
            }
        }
    }

    std::vector<double> lambda(n);
    for (std::size_t i = 0; i < n; ++i) lambda[i] = a(i, i);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::fabs(lambda[x]) > std::fabs(lambda[y]);
    });

    EigResult res;
    res.values.resize(n);
    res.vectors = DenseMatrix(n, n);
    for (std::size_t jj = 0; jj < n; ++jj) {
        res.values[jj] = lambda[order[jj]];
        for (std::size_t i = 0; i < n; ++i) res.vectors(i, jj) = vmat(i, order[jj]);
    }
    return res;
}

}  // namespace sscag
