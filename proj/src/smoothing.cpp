#include "sscag/smoothing.hpp"

#include <cmath>
#include <stdexcept>

namespace sscag {

double power_weight(double alpha, int order, int t) {
    if (alpha <= 0.0) throw std::invalid_argument("power_weight: alpha must be positive");
    if (t < 0 || t > order) throw std::invalid_argument("power_weight: t out of range");
    if (alpha == 1.0) return 1.0 / static_cast<double>(order + 1);
    return (1.0 - alpha) * std::pow(alpha, t) / (1.0 - std::pow(alpha, order + 1));
}

DenseMatrix power_method(const SparseMatrix& p, const DenseMatrix& m0, int order, double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("power_method: alpha must be positive");
    if (order < 0) throw std::invalid_argument("power_method: order must be >= 0");
    if (p.rows() != p.cols() || p.cols() != m0.rows())
        throw std::invalid_argument("power_method: shape mismatch");

    const double w0 = power_weight(alpha, order, 0);
    DenseMatrix z = m0;
    for (double& v : z.values()) v *= w0;
    for (int t = 1; t <= order; ++t) {
        DenseMatrix pz = spmm(p, z);
        std::vector<double>& dst = pz.values();
        const std::vector<double>& base = m0.values();
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = alpha * dst[i] + w0 * base[i];
        z = std::move(pz);
    }
    return z;
}

NsrMatrix build_nsr(const NormalizedOperators& ops, int order, double alpha) {
    NsrMatrix nsr;
    nsr.z = power_method(ops.p_hat, densify(ops.x_hat), order, alpha);
    nsr.alpha = alpha;
    nsr.order = order;
    return nsr;
}

}  // namespace sscag
