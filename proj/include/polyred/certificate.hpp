#pragma once

#include "polyred/enumerate.hpp"
#include "polyred/family.hpp"
#include "polyred/linalg.hpp"

#include <string>
#include <vector>

namespace polyred {

/// One face-defining constraint: `constraint` (relation <= or >=) is a valid
/// inequality and the face is where it holds with equality. Validity is
/// required on the face cut out by all constraints of lower level, so a
/// level-0 constraint is valid on the whole target polytope.
struct FaceConstraint {
    LinConstraint constraint;
    int level = 0;

    friend bool operator==(const FaceConstraint&, const FaceConstraint&) = default;
};

/// Face of a target polytope. Coordinate fixings are level-0 constraints
/// x >= 0 / x <= 1, kept separately so they can drive face-restricted
/// enumeration.
struct FaceSpec {
    std::vector<CoordLabel> zero_fixed;
    std::vector<CoordLabel> one_fixed;
    std::vector<FaceConstraint> constraints;

    bool whole_polytope() const { return zero_fixed.empty() && one_fixed.empty() && constraints.empty(); }
    /// Highest level in use, or -1 for the whole polytope.
    int max_level() const;
    /// Fixings as a per-coordinate vector over the target labels.
    Fixing fixing(const std::vector<CoordLabel>& target_labels) const;
};

/// `actual` compared against the recorded formula value `claimed`.
struct DimAssertion {
    std::string name;
    long long claimed = 0;
    long long actual = 0;
    Relation relation = Relation::Eq; ///< Eq: actual == claimed, Le: actual <= claimed

    bool holds() const { return relation == Relation::Eq ? actual == claimed : actual <= claimed; }
    friend bool operator==(const DimAssertion&, const DimAssertion&) = default;
};

/// Executable witness that the source polytope is affinely equivalent to a
/// face of the target polytope.
struct ReductionCertificate {
    std::string id;
    std::string provenance;
    FamilySpec source;
    FamilySpec target;
    FaceSpec face;
    AffineMap map; ///< source coordinates -> target coordinates
    long long claimed_target_dim = 0;
    std::vector<DimAssertion> dims;
    std::vector<std::string> flags;
};

/// Target vertices satisfying every fixing and tight at every face
/// constraint. Performs no validity checking.
VertexSet materialize_face(const FamilySpec& target, const FaceSpec& face, const Guard& guard = {});

/// Whole-polytope certificate with the identity map.
ReductionCertificate identity_cert(const FamilySpec& spec);

} // namespace polyred
