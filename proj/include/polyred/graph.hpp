#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace polyred {

/// Simple undirected graph with named nodes. Edges are stored as index
/// pairs (u < v) sorted lexicographically; this sorted order is the
/// canonical edge order used everywhere, including E(v).
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph() = default;
    /// Throws ValidationError on duplicate names, loops, repeated or
    /// dangling edges.
    Graph(std::vector<std::string> nodes, const std::vector<std::pair<std::string, std::string>>& edges);
    Graph(std::vector<std::string> nodes, std::vector<Edge> edges);

    static Graph complete(int k);
    static Graph path(int k);
    static Graph cycle(int k);
    static Graph edgeless(int k);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Indices into edges() of the edges incident to v, in canonical order.
    const std::vector<std::size_t>& incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(incident(v).size()); }
    bool adjacent(int u, int v) const;
    /// Nodes incident to no edge.
    std::vector<int> isolated() const;
    int index_of(const std::string& name) const;

    /// Structural equality: same node count and edge set; names ignored.
    bool same_structure(const Graph& other) const { return node_count() == other.node_count() && edges_ == other.edges_; }
    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void finalize();

    std::vector<std::string> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// 0/1 matrix with `rows` ground elements and `cols` subsets, stored as the
/// sorted column support of each row.
class IncidenceMatrix {
public:
    IncidenceMatrix() = default;
    IncidenceMatrix(std::size_t cols, std::vector<std::vector<int>> row_supports);
    static IncidenceMatrix from_dense(const std::vector<std::vector<int>>& dense);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<int>& row(std::size_t i) const { return rows_[i]; }
    bool at(std::size_t i, std::size_t j) const;

    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<int>> rows_;
};

} // namespace polyred
