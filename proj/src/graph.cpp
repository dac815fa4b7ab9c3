#include "polyred/graph.hpp"

#include "polyred/errors.hpp"

#include <algorithm>
#include <set>

namespace polyred {

Graph::Graph(std::vector<std::string> nodes, const std::vector<std::pair<std::string, std::string>>& edges)
    : nodes_(std::move(nodes))
{
    std::vector<Edge> idx;
    idx.reserve(edges.size());
    for (const auto& [a, b] : edges)
        idx.emplace_back(index_of(a), index_of(b));
    edges_ = std::move(idx);
    finalize();
}

Graph::Graph(std::vector<std::string> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges))
{
    finalize();
}

void Graph::finalize()
{
    std::set<std::string> names(nodes_.begin(), nodes_.end());
    if (names.size() != nodes_.size())
        throw ValidationError("graph: duplicate node names");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= node_count() || v >= node_count())
            throw ValidationError("graph: edge endpoint out of range");
        if (u == v)
            throw ValidationError("graph: loop at node " + nodes_[static_cast<std::size_t>(u)]);
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw ValidationError("graph: repeated edge");
    incident_.assign(nodes_.size(), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        incident_[static_cast<std::size_t>(edges_[e].first)].push_back(e);
        incident_[static_cast<std::size_t>(edges_[e].second)].push_back(e);
    }
}

namespace {
std::vector<std::string> numbered(int k)
{
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i)
        names.push_back(std::to_string(i));
    return names;
}
} // namespace

Graph Graph::complete(int k)
{
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            e.emplace_back(i, j);
    return Graph(numbered(k), std::move(e));
}

Graph Graph::path(int k)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < k; ++i)
        e.emplace_back(i, i + 1);
    return Graph(numbered(k), std::move(e));
}

Graph Graph::cycle(int k)
{
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        e.emplace_back(i, (i + 1) % k);
    return Graph(numbered(k), std::move(e));
}

Graph Graph::edgeless(int k)
{
    return Graph(numbered(k), std::vector<Edge>{});
}

bool Graph::adjacent(int u, int v) const
{
    if (u > v)
        std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> Graph::isolated() const
{
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
        if (incident(v).empty())
            out.push_back(v);
    return out;
}

int Graph::index_of(const std::string& name) const
{
    auto it = std::find(nodes_.begin(), nodes_.end(), name);
    if (it == nodes_.end())
        throw ValidationError("graph: unknown node '" + name + "'");
    return static_cast<int>(it - nodes_.begin());
}

IncidenceMatrix::IncidenceMatrix(std::size_t cols, std::vector<std::vector<int>> row_supports)
    : cols_(cols), rows_(std::move(row_supports))
{
    for (auto& r : rows_) {
        std::sort(r.begin(), r.end());
        if (std::adjacent_find(r.begin(), r.end()) != r.end())
            throw ValidationError("incidence matrix: repeated column in a row");
        for (int j : r)
            if (j < 0 || static_cast<std::size_t>(j) >= cols_)
                throw ValidationError("incidence matrix: column index out of range");
    }
}

IncidenceMatrix IncidenceMatrix::from_dense(const std::vector<std::vector<int>>& dense)
{
    std::size_t cols = dense.empty() ? 0 : dense[0].size();
    std::vector<std::vector<int>> rows;
    for (const auto& r : dense) {
        if (r.size() != cols)
            throw ValidationError("incidence matrix: ragged rows");
        std::vector<int> support;
        for (std::size_t j = 0; j < cols; ++j) {
            if (r[j] != 0 && r[j] != 1)
                throw ValidationError("incidence matrix: entries must be 0 or 1");
            if (r[j] == 1)
                support.push_back(static_cast<int>(j));
        }
        rows.push_back(std::move(support));
    }
    return IncidenceMatrix(cols, std::move(rows));
}

bool IncidenceMatrix::at(std::size_t i, std::size_t j) const
{
    return std::binary_search(rows_[i].begin(), rows_[i].end(), static_cast<int>(j));
}

} // namespace polyred
