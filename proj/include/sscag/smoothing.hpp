#pragma once

#include "sscag/graph.hpp"
#include "sscag/matrix.hpp"

namespace sscag {

// Smoothed representation Z with its decay factor and truncation order.
struct NsrMatrix {
    DenseMatrix z;
    double alpha = 0.0;
    int order = 0;
};

// w_t = (1-alpha) alpha^t / (1 - alpha^{T+1}); uniform 1/(T+1) at alpha = 1.
double power_weight(double alpha, int order, int t);

// Sum_{t=0..T} w_t P^t M0, evaluated by the Horner-style recurrence
// Z <- alpha P Z + w_0 M0. Costs T sparse products; alpha may exceed 1.
DenseMatrix power_method(const SparseMatrix& p, const DenseMatrix& m0, int order, double alpha);

NsrMatrix build_nsr(const NormalizedOperators& ops, int order, double alpha);

}  // namespace sscag
