#pragma once

// Common intersection Hit(Omega) of a family over a polytope domain. For an
// affine family the intersection over Omega equals the intersection over the
// domain generators, so one stacked LP decides one-point hitting.

#include <vector>

#include "polyhit/family.hpp"
#include "polyhit/lp.hpp"

namespace polyhit {

struct IntersectionSystem {
  HalfspaceSystem sys;
  std::vector<RatVector> generators;
};

/// Members at every generator stacked in generator order. Throws Unsupported
/// for unrestricted domains.
IntersectionSystem common_intersection(const AffineFamily& family);

/// Feasible witness in Hit(Omega), or a Farkas vector for the stacked system.
LpOutcome hit_one_point(const AffineFamily& family);

}  // namespace polyhit
