#pragma once

#include "polyred/certificate.hpp"
#include "polyred/enumerate.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyred {

enum class Status { Verified, Failed, Flagged };

const char* status_name(Status s);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;

    friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
    std::string id;
    Status status = Status::Failed;
    std::vector<Check> checks;
    std::vector<DimAssertion> dims;
    std::vector<std::string> flags;
    double elapsed_ms = 0; ///< wall time; not part of emitted reports

    bool verified() const { return status == Status::Verified; }
    /// First failing check, if any.
    const Check* first_failure() const;
};

/// How check_certificate obtains target vertices. Auto tries the full
/// enumeration and falls back to face-restricted search past the guard.
enum class TargetPath { Auto, Full, Restricted };

/// Checks, in order: face validity, face extraction, bijection of the map
/// onto the face, equal affine ranks; then claimed dimensions. Enumeration
/// beyond the guard yields status Flagged rather than Failed.
VerificationReport check_certificate(const ReductionCertificate& cert, const Guard& guard = {},
                                     TargetPath path = TargetPath::Auto);

/// Whether x lies in conv(points), by exact LP.
bool convex_membership(const RatVector& x, std::span<const RatVector> points);

/// Whether `subset` is the vertex set of a face of conv(p): some functional
/// (a, b) has a.v = b on the subset and a.v <= b - 1 on every other vertex.
/// Throws UsageError when the subset is empty or not made of vertices of p.
bool is_face_subset(const VertexSet& p, std::span<const Point01> subset);

/// Whether conv{u, v} is an edge of conv(p). Decided by exact LP: the pair
/// is non-adjacent iff their midpoint is a convex combination of the
/// vertices that gives positive weight to some third vertex.
bool are_adjacent(const VertexSet& p, const Point01& u, const Point01& v);

/// First non-adjacent vertex pair (by vertex index), if any.
std::optional<std::pair<std::size_t, std::size_t>> find_nonadjacent_pair(const VertexSet& p);
inline bool is_two_neighborly(const VertexSet& p) { return !find_nonadjacent_pair(p).has_value(); }

/// Given six distinct stable sets of g with y1 + y2 = y3 + y4 = y5 + y6,
/// builds two further stable sets y7, y8 with y7 + y8 = y1 + y2 through the
/// set algebra on the coordinates where y1 and y2 differ. Throws
/// ValidationError on inputs that are not distinct, not stable, or not
/// paired.
std::pair<Point01, Point01> witness_pair(const Graph& g, const std::array<Point01, 6>& ys);

struct ScanCounterexample {
    Graph graph;
    std::array<Point01, 6> vertices;
    std::string reason;
};

struct NonfaceScanResult {
    int max_nodes = 0;
    std::vector<std::size_t> graphs_per_size; ///< index k = node count
    std::size_t graphs_scanned = 0;
    std::size_t candidates = 0;   ///< paired, rank-3 six-vertex subsets
    std::size_t lp_checks = 0;
    std::vector<ScanCounterexample> counterexamples;
};

/// Every labeled graph on 1..max_nodes nodes: every six stable sets forming
/// three pairs with a common midpoint and affine rank 3 (the only way six
/// vertices can be affinely an octahedron) must fail the face test, and
/// witness_pair must succeed for each choice of leading pair.
NonfaceScanResult octahedron_nonface_scan(int max_nodes, const Guard& guard = {});
VerificationReport to_report(const NonfaceScanResult& scan);

} // namespace polyred
