#pragma once

#include "polyred/family.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace polyred {

/// Bound on search states visited by one enumeration.
struct Guard {
    std::uint64_t max_states = 10'000'000;

    /// Default guard, overridden by a positive integer in POLYRED_GUARD.
    static Guard from_env();
};

/// Per-coordinate fixing: -1 free, 0 or 1 forced.
using Fixing = std::vector<std::int8_t>;

/// Full vertex set of a family instance. Throws ResourceError when the
/// instance is beyond the guard.
VertexSet enumerate(const FamilySpec& spec, const Guard& guard = {});

VertexSet enumerate_bqp(int n, const Guard& guard = {});
VertexSet enumerate_cut(int n, const Guard& guard = {});
VertexSet enumerate_ssp(const Graph& g, const Guard& guard = {});
enum class PackMode { Pack, Part };
VertexSet enumerate_pack_part(const IncidenceMatrix& a, PackMode mode, const Guard& guard = {});
/// Throws ValidationError when a row does not have exactly four ones.
VertexSet enumerate_dcp(const IncidenceMatrix& b, const Guard& guard = {});
VertexSet enumerate_assignment(int m, int p, const Guard& guard = {});
VertexSet enumerate_lop(int m, const Guard& guard = {});

/// Vertices of the family that satisfy the fixings, found by
/// constraint-propagating search; never materializes the full set.
/// Contradictory fixings give an empty set.
VertexSet face_restricted_enumerate(const FamilySpec& spec, const Fixing& fixing, const Guard& guard = {});
VertexSet face_restricted_enumerate(const FamilySpec& spec, std::span<const CoordLabel> zero_fixed,
                                    std::span<const CoordLabel> one_fixed, const Guard& guard = {});

/// All pairs of distinct base labels, first preceding second in base order.
std::vector<QuadPair> all_pairs(const std::vector<CoordLabel>& base);

/// Extends every base vertex by the products named in `pairs`. Throws
/// ValidationError on an unknown factor or a pair whose factors are out of
/// base order.
VertexSet quadratic_lift(const VertexSet& base, std::span<const QuadPair> pairs);

} // namespace polyred
