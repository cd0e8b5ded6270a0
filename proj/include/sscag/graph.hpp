#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sscag/matrix.hpp"

namespace sscag {

// Immutable vertex/edge/attribute store. Adjacency always carries one
// self-loop per vertex; m counts undirected edges excluding self-loops.
struct AttributedGraph {
    std::size_t n = 0;
    std::size_t m = 0;
    SparseMatrix adjacency;   // symmetric 0/1 with unit diagonal
    SparseMatrix attributes;  // n x d, nonnegative
    std::vector<std::int32_t> labels;  // empty when no ground truth
    std::size_t num_label_classes = 0;
    std::vector<std::int64_t> vertex_ids;  // original ids for output mapping

    std::size_t d() const { return attributes.cols(); }
    bool has_labels() const { return !labels.empty(); }
};

// Normalized operators ready for power iterations.
struct NormalizedOperators {
    SparseMatrix p_hat;    // row-stochastic transition matrix
    SparseMatrix p_hat_t;  // its transpose, materialized
    SparseMatrix x_hat;    // row-scaled attributes
    SparseMatrix x_hat_t;  // transpose of x_hat
    std::vector<double> ahat_rowsum;  // row sums of the normalized adjacency
    std::size_t zero_attribute_rows = 0;
};

// Edge file: whitespace-separated "u v" lines, '#' comments. Attribute file:
// Matrix Market coordinate or dense TSV. Label file: "vertex<TAB>label".
AttributedGraph load_graph(const std::string& edge_path, const std::string& attribute_path,
                           const std::string& label_path = "");

AttributedGraph build_graph(std::size_t n,
                            const std::vector<std::pair<std::int32_t, std::int32_t>>& edges,
                            SparseMatrix attributes,
                            std::vector<std::int32_t> labels = {});

// Writes the canonical on-disk form (edge list, coordinate attribute matrix,
// label TSV). Reloading the written files reproduces the graph exactly.
void save_graph(const AttributedGraph& g, const std::string& edge_path,
                const std::string& attribute_path, const std::string& label_path = "");

SparseMatrix normalize_adjacency(const AttributedGraph& g);

SparseMatrix row_normalize_transition(const SparseMatrix& a_hat);

struct AttrNormResult {
    SparseMatrix x_hat;
    std::size_t zero_rows = 0;  // rows left as zeros (no attribute signal)
};
AttrNormResult normalize_attributes(const SparseMatrix& x);

NormalizedOperators build_operators(const AttributedGraph& g);

SparseMatrix load_attribute_matrix(const std::string& path);

}  // namespace sscag
