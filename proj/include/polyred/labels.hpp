#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polyred {

struct CoordLabel;

// Index fields are 1-based, as in the usual notation x_{ij}, y_{ij}, z_{ijkl}.

struct BqpDiag { int i; };
struct BqpOff { int i, j; };
struct CutEdge { int i, j; };
struct Node { std::string name; };
struct Column { int j; };
struct Slack { std::string tag; std::vector<int> indices; };
/// Three-index assignment coordinate x(s,t,u) over a ground set.
struct Triple { int s, t, u; };
/// p-index assignment coordinate x_{i1...ip}, p != 3.
struct Tuple { std::vector<int> indices; };
/// Linear-ordering coordinate y_{ij}, i < j.
struct OrdPair { int i, j; };
/// Assignment-matrix coordinate y_{ij}.
struct Cell { int i, j; };
/// Product coordinate of two base coordinates, first preceding second.
struct QuadPair { std::vector<CoordLabel> factors; };

/// Label of one coordinate of a vertex set. Each label has a unique textual
/// form, e.g. "x(1,2)", "node(a)", "z(y(1,2);y(3,4))", which is also the
/// form used in certificate files.
struct CoordLabel {
    using Value = std::variant<BqpDiag, BqpOff, CutEdge, Node, Column, Slack, Triple,
                               Tuple, OrdPair, Cell, QuadPair>;
    Value value;

    std::string str() const;
    /// Throws ValidationError on malformed text.
    static CoordLabel parse(std::string_view text);

    friend bool operator==(const CoordLabel& a, const CoordLabel& b) { return a.str() == b.str(); }
};

CoordLabel quad(const CoordLabel& first, const CoordLabel& second);

} // namespace polyred
