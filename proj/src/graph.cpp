#include "sscag/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sscag {

namespace {

[[noreturn]] void parse_fail(const std::string& path, std::size_t line_no, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
}

bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, std::int64_t>> read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge file: " + path);
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        std::istringstream ss(line);
        std::int64_t u, v;
        if (!(ss >> u >> v)) parse_fail(path, line_no, "expected two vertex ids");
        std::string rest;
        if (ss >> rest) parse_fail(path, line_no, "trailing tokens after edge");
        edges.emplace_back(u, v);
    }
    return edges;
}

SparseMatrix read_matrix_market(std::istream& in, const std::string& path,
                                const std::string& banner) {
    std::istringstream hd(banner);
    std::string mm, object, format, field, symmetry;
    hd >> mm >> object >> format >> field >> symmetry;
    if (object != "matrix") throw std::runtime_error(path + ": unsupported MatrixMarket object");
    if (format != "coordinate")
        throw std::runtime_error(path + ": only coordinate format is supported");
    const bool pattern = field == "pattern";
    if (field != "real" && field != "integer" && !pattern)
        throw std::runtime_error(path + ": unsupported MatrixMarket field '" + field + "'");
    const bool symmetric = symmetry == "symmetric";
    if (symmetry != "general" && !symmetric)
        throw std::runtime_error(path + ": unsupported MatrixMarket symmetry '" + symmetry + "'");

    std::string line;
    std::size_t line_no = 1;
    std::size_t rows = 0, cols = 0, count = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '%') continue;
        std::istringstream ss(line);
        if (!(ss >> rows >> cols >> count)) parse_fail(path, line_no, "bad size header");
        break;
    }
    if (rows == 0 || cols == 0) throw std::runtime_error(path + ": missing size header");

    std::vector<SparseMatrix::Triplet> trips;
    trips.reserve(count);
    std::size_t seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line) || (!line.empty() && line[0] == '%')) continue;
        std::istringstream ss(line);
        std::int64_t r, c;
        double v = 1.0;
        if (!(ss >> r >> c)) parse_fail(path, line_no, "bad coordinate entry");
        if (!pattern && !(ss >> v)) parse_fail(path, line_no, "missing value");
        if (r < 1 || c < 1 || static_cast<std::size_t>(r) > rows ||
            static_cast<std::size_t>(c) > cols)
            parse_fail(path, line_no, "coordinate out of range");
        trips.push_back({static_cast<std::int32_t>(r - 1), static_cast<std::int32_t>(c - 1), v});
        if (symmetric && r != c)
            trips.push_back({static_cast<std::int32_t>(c - 1), static_cast<std::int32_t>(r - 1), v});
        ++seen;
    }
    if (seen != count)
        throw std::runtime_error(path + ": entry count mismatch (header says " +
                                 std::to_string(count) + ", found " + std::to_string(seen) + ")");
    return SparseMatrix::from_triplets(rows, cols, std::move(trips));
}

SparseMatrix read_dense_tsv(std::istream& in, const std::string& path, std::string first_line,
                            std::size_t first_line_no) {
    std::vector<SparseMatrix::Triplet> trips;
    std::size_t rows = 0, cols = 0;
    std::string line = std::move(first_line);
    std::size_t line_no = first_line_no;
    bool pending = true;
    while (pending || std::getline(in, line)) {
        if (!pending) ++line_no;
        pending = false;
        if (blank_or_comment(line)) continue;
        std::istringstream ss(line);
        double v;
        std::size_t c = 0;
        while (ss >> v) {
            if (v != 0.0)
                trips.push_back({static_cast<std::int32_t>(rows), static_cast<std::int32_t>(c), v});
            ++c;
        }
        if (!ss.eof()) parse_fail(path, line_no, "non-numeric attribute value");
        if (cols == 0)
            cols = c;
        else if (c != cols)
            parse_fail(path, line_no, "ragged attribute row");
        ++rows;
    }
    if (rows == 0) throw std::runtime_error(path + ": empty attribute matrix");
    return SparseMatrix::from_triplets(rows, cols, std::move(trips));
}

void validate_attributes(const SparseMatrix& x, const std::string& path) {
    for (double v : x.val) {
        if (!std::isfinite(v)) throw std::runtime_error(path + ": non-finite attribute value");
        if (v < 0.0) throw std::runtime_error(path + ": negative attribute value");
    }
}

std::vector<std::int32_t> read_labels(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open label file: " + path);
    std::vector<std::int64_t> raw(n, -1);
    std::vector<bool> seen(n, false);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        std::istringstream ss(line);
        std::int64_t vtx, lab;
        if (!(ss >> vtx >> lab)) parse_fail(path, line_no, "expected 'vertex<TAB>label'");
        if (vtx < 0 || static_cast<std::size_t>(vtx) >= n)
            parse_fail(path, line_no, "vertex id out of range");
        if (seen[vtx]) parse_fail(path, line_no, "duplicate label for vertex " + std::to_string(vtx));
        seen[vtx] = true;
        raw[vtx] = lab;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!seen[i])
            throw std::runtime_error(path + ": missing label for vertex " + std::to_string(i));

    // Remap arbitrary label values to contiguous 0..k-1 by sorted order.
    std::set<std::int64_t> distinct(raw.begin(), raw.end());
    std::map<std::int64_t, std::int32_t> remap;
    std::int32_t next = 0;
    for (std::int64_t v : distinct) remap[v] = next++;
    std::vector<std::int32_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = remap[raw[i]];
    return out;
}

}  // namespace

SparseMatrix load_attribute_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open attribute file: " + path);
    std::string first;
    std::size_t line_no = 0;
    while (std::getline(in, first)) {
        ++line_no;
        if (first.rfind("%%MatrixMarket", 0) == 0) return read_matrix_market(in, path, first);
        if (!blank_or_comment(first) && first[0] != '%')
            return read_dense_tsv(in, path, first, line_no);
    }
    throw std::runtime_error(path + ": empty attribute file");
}

AttributedGraph build_graph(std::size_t n,
                            const std::vector<std::pair<std::int32_t, std::int32_t>>& edges,
                            SparseMatrix attributes, std::vector<std::int32_t> labels) {
    if (attributes.rows() != n) throw std::runtime_error("attribute row count does not match n");

    std::set<std::pair<std::int32_t, std::int32_t>> undirected;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw std::runtime_error("vertex id out of range: (" + std::to_string(u) + ", " +
                                     std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) continue;  // input self-loops are ignored; one is re-added below
        undirected.insert({std::min(u, v), std::max(u, v)});
    }

    std::vector<SparseMatrix::Triplet> trips;
    trips.reserve(2 * undirected.size() + n);
    for (auto [u, v] : undirected) {
        trips.push_back({u, v, 1.0});
        trips.push_back({v, u, 1.0});
    }
    for (std::size_t i = 0; i < n; ++i)
        trips.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(i), 1.0});

    AttributedGraph g;
    g.n = n;
    g.m = undirected.size();
    g.adjacency = SparseMatrix::from_triplets(n, n, std::move(trips));
    g.attributes = std::move(attributes);
    g.vertex_ids.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.vertex_ids[i] = static_cast<std::int64_t>(i);
    if (!labels.empty()) {
        if (labels.size() != n) throw std::runtime_error("label count does not match n");
        std::int32_t mx = -1;
        for (std::int32_t l : labels) {
            if (l < 0) throw std::runtime_error("negative label id");
            mx = std::max(mx, l);
        }
        g.labels = std::move(labels);
        g.num_label_classes = static_cast<std::size_t>(mx) + 1;
    }
    return g;
}

AttributedGraph load_graph(const std::string& edge_path, const std::string& attribute_path,
                           const std::string& label_path) {
    SparseMatrix attrs = load_attribute_matrix(attribute_path);
    validate_attributes(attrs, attribute_path);
    const std::size_t n = attrs.rows();

    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    for (auto [u, v] : read_edge_list(edge_path)) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw std::runtime_error(edge_path + ": vertex id out of range: (" + std::to_string(u) +
                                     ", " + std::to_string(v) + ") with n=" + std::to_string(n));
        edges.emplace_back(static_cast<std::int32_t>(u), static_cast<std::int32_t>(v));
    }

    std::vector<std::int32_t> labels;
    if (!label_path.empty()) labels = read_labels(label_path, n);
    return build_graph(n, edges, std::move(attrs), std::move(labels));
}

void save_graph(const AttributedGraph& g, const std::string& edge_path,
                const std::string& attribute_path, const std::string& label_path) {
    {
        std::ofstream out(edge_path);
        if (!out) throw std::runtime_error("cannot write edge file: " + edge_path);
        out << "# undirected edges, one per line\n";
        for (std::size_t i = 0; i < g.n; ++i) {
            for (std::int64_t p = g.adjacency.row_ptr[i]; p < g.adjacency.row_ptr[i + 1]; ++p) {
                const std::size_t j = static_cast<std::size_t>(g.adjacency.col[p]);
                if (j > i) out << i << " " << j << "\n";
            }
        }
    }
    {
        std::ofstream out(attribute_path);
        if (!out) throw std::runtime_error("cannot write attribute file: " + attribute_path);
        out << "%%MatrixMarket matrix coordinate real general\n";
        out << g.attributes.rows() << " " << g.attributes.cols() << " " << g.attributes.nnz()
            << "\n";
        char buf[64];
        for (std::size_t i = 0; i < g.attributes.rows(); ++i) {
            for (std::int64_t p = g.attributes.row_ptr[i]; p < g.attributes.row_ptr[i + 1]; ++p) {
                std::snprintf(buf, sizeof(buf), "%.17g", g.attributes.val[p]);
                out << (i + 1) << " " << (g.attributes.col[p] + 1) << " " << buf << "\n";
            }
        }
    }
    if (!label_path.empty() && g.has_labels()) {
        std::ofstream out(label_path);
        if (!out) throw std::runtime_error("cannot write label file: " + label_path);
        for (std::size_t i = 0; i < g.n; ++i) out << i << "\t" << g.labels[i] << "\n";
    }
}

SparseMatrix normalize_adjacency(const AttributedGraph& g) {
    const SparseMatrix& a = g.adjacency;
    std::vector<double> inv_sqrt_deg(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        const double deg = static_cast<double>(a.row_ptr[i + 1] - a.row_ptr[i]);
        inv_sqrt_deg[i] = 1.0 / std::sqrt(deg);  // self-loop keeps deg >= 1
    }
    SparseMatrix out = a;
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::int64_t p = out.row_ptr[i]; p < out.row_ptr[i + 1]; ++p)
            out.val[p] = inv_sqrt_deg[i] * inv_sqrt_deg[static_cast<std::size_t>(out.col[p])];
    return out;
}

SparseMatrix row_normalize_transition(const SparseMatrix& a_hat) {
    SparseMatrix out = a_hat;
    for (std::size_t i = 0; i < out.rows(); ++i) {
        double s = 0.0;
        for (std::int64_t p = out.row_ptr[i]; p < out.row_ptr[i + 1]; ++p) s += out.val[p];
        if (!(s > 0.0))
            throw std::logic_error("row_normalize_transition: nonpositive row sum at row " +
                                   std::to_string(i));
        for (std::int64_t p = out.row_ptr[i]; p < out.row_ptr[i + 1]; ++p) out.val[p] /= s;
    }
    return out;
}

AttrNormResult normalize_attributes(const SparseMatrix& x) {
    // scale_i = X_i . s with s the column-sum vector; computed in O(nnz).
    std::vector<double> colsum(x.cols(), 0.0);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::int64_t p = x.row_ptr[i]; p < x.row_ptr[i + 1]; ++p)
            colsum[static_cast<std::size_t>(x.col[p])] += x.val[p];

    AttrNormResult res;
    res.x_hat = x;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        double scale = 0.0;
        for (std::int64_t p = x.row_ptr[i]; p < x.row_ptr[i + 1]; ++p)
            scale += x.val[p] * colsum[static_cast<std::size_t>(x.col[p])];
        if (scale > 0.0) {
            const double inv = 1.0 / std::sqrt(scale);
            for (std::int64_t p = x.row_ptr[i]; p < x.row_ptr[i + 1]; ++p) res.x_hat.val[p] *= inv;
        } else {
            res.zero_rows++;  // row stays zero: no attribute signal
        }
    }
    return res;
}

NormalizedOperators build_operators(const AttributedGraph& g) {
    NormalizedOperators ops;
    SparseMatrix a_hat = normalize_adjacency(g);
    ops.ahat_rowsum = a_hat.row_sums();
    ops.p_hat = row_normalize_transition(a_hat);
    ops.p_hat_t = ops.p_hat.transposed();
    AttrNormResult an = normalize_attributes(g.attributes);
    ops.x_hat = std::move(an.x_hat);
    ops.x_hat_t = ops.x_hat.transposed();
    ops.zero_attribute_rows = an.zero_rows;
    return ops;
}

}  // namespace sscag
