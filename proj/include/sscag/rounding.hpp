#pragma once

#include <cstdint>
#include <vector>

#include "sscag/matrix.hpp"

namespace sscag {

struct ClusterAssignment {
    std::vector<std::int32_t> labels;  // in 0..k-1
    std::int32_t k = 0;
    std::vector<std::int64_t> sizes;

    static ClusterAssignment from_labels(std::vector<std::int32_t> labels, std::int32_t k);
};

// n x k indicator with entries 1/sqrt(|C_j|); C^T C = I by construction.
SparseMatrix vca_matrix(const ClusterAssignment& a);

struct RoundReport {
    std::vector<double> objective_trace;  // recorded after each rotation fit
    int iterations = 0;
    int repairs = 0;  // vertices moved to refill empty clusters
};

// Alternating rotation/assignment discretization of a column-orthonormal
// embedding: fit an orthogonal T aligning Y T to the current indicator
// (orthogonal Procrustes), reassign rows by argmax of Y T, repeat until the
// assignment is stable. Empty clusters are refilled with the worst-fitting
// vertex. Deterministic for a fixed seed.
ClusterAssignment snem_round(const DenseMatrix& y, int max_iters, std::uint64_t seed,
                             RoundReport* report = nullptr);

// Lloyd iterations with k-means++ seeding on the rows of Y.
ClusterAssignment kmeans_round(const DenseMatrix& y, std::int32_t k, std::uint64_t seed,
                               int restarts = 1);

}  // namespace sscag
