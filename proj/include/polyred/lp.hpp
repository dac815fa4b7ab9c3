#pragma once

#include "polyred/linalg.hpp"

#include <optional>
#include <span>

namespace polyred {

/// Exact feasibility of a system of linear constraints over `dim` free
/// variables. Returns a point satisfying every constraint exactly, or
/// nullopt when the system is infeasible. Phase-one simplex with Bland's
/// rule, so it always terminates.
std::optional<RatVector> lp_feasible(std::span<const LinConstraint> constraints,
                                     std::size_t dim);

} // namespace polyred
