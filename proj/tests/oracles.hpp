#pragma once

// Brute-force oracles: filter {0,1}^d by each family's defining system,
// written here from the definitions and independent of the library's
// search code and of satisfies_definition.

#include "polyred/family.hpp"
#include "polyred/graph.hpp"
#include "polyred/linalg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using polyred::Graph;
using polyred::IncidenceMatrix;
using polyred::Point01;

inline std::vector<Point01> filter_cube(std::size_t d, const std::function<bool(const Point01&)>& keep)
{
    std::vector<Point01> out;
    Point01 x(d, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        for (std::size_t i = 0; i < d; ++i)
            x[i] = (mask >> (d - 1 - i)) & 1; // first coordinate most significant
        if (keep(x))
            out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Position of the off-diagonal x(i,j), i<j, in the canonical BQP order.
inline std::size_t bqp_pos(int n, int i, int j)
{
    std::size_t p = static_cast<std::size_t>(n);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b, ++p)
            if (a == i && b == j)
                return p;
    return p;
}

inline std::vector<Point01> bqp(int n)
{
    std::size_t d = static_cast<std::size_t>(n * (n + 1) / 2);
    return filter_cube(d, [n](const Point01& x) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (x[bqp_pos(n, i, j)] != (x[i - 1] && x[j - 1]))
                    return false;
        return true;
    });
}

/// Pair position in lexicographic order over 1 <= i < j <= n.
inline std::size_t pair_pos(int n, int i, int j)
{
    std::size_t p = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b, ++p)
            if (a == i && b == j)
                return p;
    return p;
}

/// Cut vectors of K_n: exactly the 0/1 edge vectors with an even sum on
/// every triangle.
inline std::vector<Point01> cut(int n)
{
    std::size_t d = static_cast<std::size_t>(n * (n - 1) / 2);
    return filter_cube(d, [n](const Point01& z) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k)
                    if ((z[pair_pos(n, i, j)] + z[pair_pos(n, j, k)] + z[pair_pos(n, i, k)]) % 2 != 0)
                        return false;
        return true;
    });
}

inline std::vector<Point01> ssp(const Graph& g, bool cover = false)
{
    return filter_cube(static_cast<std::size_t>(g.node_count()), [&](const Point01& y) {
        for (auto [u, v] : g.edges()) {
            int s = y[static_cast<std::size_t>(u)] + y[static_cast<std::size_t>(v)];
            if (cover ? s < 1 : s > 1)
                return false;
        }
        return true;
    });
}

/// Rows of a summing to rhs (equality) or at most rhs.
inline std::vector<Point01> rows(const IncidenceMatrix& a, bool equality, int rhs)
{
    return filter_cube(a.cols(), [&](const Point01& x) {
        for (std::size_t r = 0; r < a.rows(); ++r) {
            int s = 0;
            for (int c : a.row(r))
                s += x[static_cast<std::size_t>(c)];
            if (equality ? s != rhs : s > rhs)
                return false;
        }
        return true;
    });
}

/// Every index position and value has exactly one selected tuple.
inline std::vector<Point01> assignment(int m, int p)
{
    std::size_t d = 1;
    for (int i = 0; i < p; ++i)
        d *= static_cast<std::size_t>(m);
    return filter_cube(d, [m, p, d](const Point01& x) {
        for (int pos = 0; pos < p; ++pos)
            for (int v = 0; v < m; ++v) {
                int s = 0;
                for (std::size_t t = 0; t < d; ++t) {
                    std::size_t rest = t;
                    for (int q = p - 1; q > pos; --q)
                        rest /= static_cast<std::size_t>(m);
                    if (static_cast<int>(rest % static_cast<std::size_t>(m)) == v)
                        s += x[t];
                }
                if (s != 1)
                    return false;
            }
        return true;
    });
}

/// TAP_m built from its description as pairs of permutations: x(i, s(i), t(i))
/// = 1. Used where the cube filter over m^3 coordinates is too large.
inline std::vector<Point01> tap_by_permutations(int m)
{
    auto um = static_cast<std::size_t>(m);
    std::vector<int> s(um), t(um);
    for (int i = 0; i < m; ++i)
        s[static_cast<std::size_t>(i)] = i;
    std::vector<Point01> out;
    do {
        t = s;
        std::sort(t.begin(), t.end());
        do {
            Point01 x(um * um * um, 0);
            for (std::size_t i = 0; i < um; ++i)
                x[(i * um + static_cast<std::size_t>(s[i])) * um + static_cast<std::size_t>(t[i])] = 1;
            out.push_back(x);
        } while (std::next_permutation(t.begin(), t.end()));
    } while (std::next_permutation(s.begin(), s.end()));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool dicycle_ok(int m, const Point01& y)
{
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k) {
                int s = y[pair_pos(m, i, j)] + y[pair_pos(m, j, k)] - y[pair_pos(m, i, k)];
                if (s < 0 || s > 1)
                    return false;
            }
    return true;
}

inline std::vector<Point01> lop(int m)
{
    return filter_cube(static_cast<std::size_t>(m * (m - 1) / 2), [m](const Point01& y) { return dicycle_ok(m, y); });
}

/// Base coordinates b followed by all products of pairs in base order.
inline bool products_ok(std::size_t b, const Point01& x)
{
    std::size_t p = b;
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = i + 1; j < b; ++j, ++p)
            if (x[p] != (x[i] && x[j]))
                return false;
    return true;
}

inline std::vector<Point01> qlop(int m)
{
    std::size_t b = static_cast<std::size_t>(m * (m - 1) / 2);
    return filter_cube(b + b * (b - 1) / 2, [m, b](const Point01& x) {
        return dicycle_ok(m, Point01(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(b))) && products_ok(b, x);
    });
}

/// QAP (columns too) or QSAP (rows only) on m x m cells.
inline std::vector<Point01> quadratic_assignment(int m, bool columns)
{
    std::size_t b = static_cast<std::size_t>(m * m);
    return filter_cube(b + b * (b - 1) / 2, [m, b, columns](const Point01& x) {
        for (int i = 0; i < m; ++i) {
            int r = 0, c = 0;
            for (int j = 0; j < m; ++j) {
                r += x[static_cast<std::size_t>(i * m + j)];
                c += x[static_cast<std::size_t>(j * m + i)];
            }
            if (r != 1 || (columns && c != 1))
                return false;
        }
        return products_ok(b, x);
    });
}

/// Every labeled graph on k nodes named "1".."k".
inline std::vector<Graph> all_graphs(int k)
{
    std::vector<Graph::Edge> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            pairs.emplace_back(i, j);
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i)
        names.push_back(std::to_string(i));
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Graph::Edge> e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                e.push_back(pairs[i]);
        out.emplace_back(names, std::move(e));
    }
    return out;
}

inline Graph random_graph(int k, double p, std::mt19937& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Graph::Edge> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (coin(rng))
                e.emplace_back(i, j);
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i)
        names.push_back("v" + std::to_string(i));
    return Graph(std::move(names), std::move(e));
}

/// Six stable sets in three pairs with a common sum, built from the
/// coordinate split used by the witness construction: on I all six agree;
/// on J each coordinate picks membership bits (u, v, w) and the pairs are
/// complementary there. Edges are drawn among pairs that stay stable.
struct PairedInput {
    Graph graph;
    std::array<Point01, 6> ys;
};

inline PairedInput random_paired_input(std::mt19937& rng, int max_k = 10)
{
    std::uniform_int_distribution<int> kd(2, max_k);
    std::bernoulli_distribution coin(0.5);
    for (;;) {
        int k = kd(rng);
        std::array<Point01, 6> ys;
        for (auto& y : ys)
            y.assign(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) {
            auto ui = static_cast<std::size_t>(i);
            if (coin(rng)) { // in I
                std::uint8_t c = coin(rng) ? 1 : 0;
                for (auto& y : ys)
                    y[ui] = c;
            } else {
                for (int pair = 0; pair < 3; ++pair) {
                    std::uint8_t b = coin(rng) ? 1 : 0;
                    ys[static_cast<std::size_t>(2 * pair)][ui] = b;
                    ys[static_cast<std::size_t>(2 * pair + 1)][ui] = 1 - b;
                }
            }
        }
        bool distinct = true;
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = a + 1; b < 6; ++b)
                distinct = distinct && ys[a] != ys[b];
        if (!distinct)
            continue;
        std::vector<Graph::Edge> edges;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                bool allowed = std::none_of(ys.begin(), ys.end(), [&](const Point01& y) {
                    return y[static_cast<std::size_t>(i)] && y[static_cast<std::size_t>(j)];
                });
                if (allowed && coin(rng))
                    edges.emplace_back(i, j);
            }
        std::vector<std::string> names;
        for (int i = 1; i <= k; ++i)
            names.push_back(std::to_string(i));
        return {Graph(std::move(names), std::move(edges)), ys};
    }
}

} // namespace oracle
