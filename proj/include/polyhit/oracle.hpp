#pragma once

// Brute-force references for checking the solvers: everything here uses only
// exact LP calls on sampled parameters, never the breakpoint machinery.

#include <cstddef>
#include <vector>

#include "polyhit/breakpoints.hpp"
#include "polyhit/family.hpp"

namespace polyhit {

struct GridSpec {
  std::size_t resolution = 201;
};

/// alpha + j (beta - alpha) / (R - 1), j = 0..R-1. Throws InputError if R < 2.
std::vector<Rat> grid_points(const AffineFamily& family, const GridSpec& grid);

struct GridCover {
  std::size_t count = 0;
  std::vector<RatVector> witnesses;
  std::vector<RatInterval> intervals;  // exact dual intervals of the witnesses
};

/// Minimum number of points hitting every sampled member (greedy over sample
/// indices). Throws EmptyMemberError on an empty sampled member.
GridCover grid_hit_cover(const AffineFamily& family, const GridSpec& grid, Exec exec = Exec::parallel);
std::size_t grid_hit_size(const AffineFamily& family, const GridSpec& grid, Exec exec = Exec::parallel);

struct RatBracket {
  Rat lo, hi;
};

/// Bisection on nu with P(lambda) and P(nu) stacked; [beta, beta] when feasible at beta.
RatBracket bisect_sigma_oracle(const AffineFamily& family, const Rat& lambda, const Rat& eps);

/// True iff every sampled member contains at least one of the points.
bool sample_verify(const AffineFamily& family, const std::vector<RatVector>& points, const GridSpec& grid,
                   Exec exec = Exec::parallel);

}  // namespace polyhit
