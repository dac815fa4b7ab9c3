#pragma once

#include "polyred/graph.hpp"
#include "polyred/labels.hpp"
#include "polyred/linalg.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace polyred {

enum class Family {
    Cube,       ///< {0,1}^n
    Bqp,        ///< Boolean quadric polytope BQP_n
    Cut,        ///< cut polytope CUT_n
    Ssp,        ///< stable sets of a graph
    Vcp,        ///< vertex covers of a graph
    Pack,       ///< Ax <= 1
    Part,       ///< Ax = 1
    Dcp,        ///< Bx = 2, four ones per row
    Assignment, ///< p-index axial assignment on m elements
    Lop,        ///< linear orderings of m elements
    Qlop,       ///< quadratic lift of LOP_m
    Qap,        ///< quadratic lift of the Birkhoff set DAP_m
    Qsap,       ///< quadratic lift of the row-assignment set
    Explicit,   ///< an arbitrary listed point set
};

const char* family_name(Family f);
/// Throws ValidationError for an unknown name.
Family parse_family(const std::string& name);

/// Family tag plus the parameters selecting one concrete instance.
/// `n` sizes BQP/CUT/cube, `m` sizes assignment/LOP/QLOP/QAP/QSAP.
struct FamilySpec {
    Family family = Family::Explicit;
    int n = 0;
    int m = 0;
    int p = 0;
    std::optional<Graph> graph;
    std::optional<IncidenceMatrix> matrix;
    /// Optional display names of the ground set of a three-index
    /// assignment instance; labels use 1-based positions into it.
    std::vector<std::string> ground;

    static FamilySpec cube(int n);
    static FamilySpec bqp(int n);
    static FamilySpec cut(int n);
    static FamilySpec ssp(Graph g);
    static FamilySpec vcp(Graph g);
    static FamilySpec pack(IncidenceMatrix a);
    static FamilySpec part(IncidenceMatrix a);
    /// Throws ValidationError unless every row has exactly four ones.
    static FamilySpec dcp(IncidenceMatrix b);
    static FamilySpec assignment(int m, int p, std::vector<std::string> ground = {});
    static FamilySpec lop(int m);
    static FamilySpec qlop(int m);
    static FamilySpec qap(int m);
    static FamilySpec qsap(int m);

    /// Canonical coordinate labels. Not available for Explicit.
    std::vector<CoordLabel> labels() const;
    std::size_t dim() const;
    std::string describe() const;

    /// Same family and parameters; graph node names and ground names are
    /// ignored.
    bool same_instance(const FamilySpec& other) const;
};

/// Whether a 0/1 point satisfies the defining constraint system of the
/// family. Written directly from the definitions; enumeration code does not
/// call it, so it serves as a re-validation check.
bool satisfies_definition(const FamilySpec& spec, const Point01& x);

/// Vertex set of one concrete polytope instance: distinct 0/1 points in
/// lexicographic order over a fixed list of coordinate labels.
class VertexSet {
public:
    VertexSet() = default;
    /// Sorts and deduplicates `vertices`.
    VertexSet(FamilySpec family, std::vector<CoordLabel> labels, std::vector<Point01> vertices);

    const FamilySpec& family() const { return family_; }
    const std::vector<CoordLabel>& labels() const { return labels_; }
    const std::vector<Point01>& vertices() const { return vertices_; }
    std::size_t dim() const { return labels_.size(); }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }

    bool contains(const Point01& x) const;
    std::optional<std::size_t> index_of(const CoordLabel& label) const;
    /// Throws ValidationError if the label is not present.
    std::size_t require_index(const CoordLabel& label) const;

    friend bool operator==(const VertexSet& a, const VertexSet& b)
    {
        return a.labels_ == b.labels_ && a.vertices_ == b.vertices_;
    }

private:
    FamilySpec family_;
    std::vector<CoordLabel> labels_;
    std::vector<Point01> vertices_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Position lookup over a label list.
std::unordered_map<std::string, std::size_t> label_index(const std::vector<CoordLabel>& labels);

} // namespace polyred
