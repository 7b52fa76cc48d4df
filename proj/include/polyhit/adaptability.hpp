#pragma once

// k-adaptability without first-stage decisions: the value of the robust
// problem is at most t exactly when the family P_t (second-stage feasible set
// with the objective row c_s(w)^T x <= t appended) has a hitting set of size k.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyhit/family.hpp"
#include "polyhit/greedy1d.hpp"

namespace polyhit {

struct FirstStage {
  std::size_t ell = 0;
  AffineMatrixMap a_f;  // m x ell, one slope per uncertain parameter
  RatVector c_f;        // length ell
};

struct AdaptInstance {
  AffineMatrixMap a_s;  // m x d_s
  AffineVectorMap b;    // m
  AffineVectorMap c_s;  // d_s
  ParameterDomain omega = ParameterDomain::interval(0, 1);
  std::vector<std::pair<Rat, Rat>> box;  // optional bounds on the second-stage variables
  std::optional<FirstStage> first;

  std::size_t m() const { return a_s.rows(); }
  std::size_t d_s() const { return a_s.cols(); }
  std::size_t p() const { return a_s.params(); }
  std::size_t ell() const { return first ? first->ell : 0; }
  /// Throws InputError on inconsistent dimensions.
  void validate() const;

  friend bool operator==(const AdaptInstance& x, const AdaptInstance& y);
};

/// Family over Omega in the second-stage variables: A_s(w) x <= b(w),
/// c_s(w)^T x <= t, then the box rows. Requires ell = 0.
AffineFamily build_pt(const AdaptInstance& inst, const Rat& t);

/// P_t(w) over (x_f, x_s) (first-stage coordinates first), any ell.
HalfspaceSystem pt_member(const AdaptInstance& inst, const Rat& t, const RatVector& omega);

struct AdaptDecision {
  bool yes = false;
  bool empty_member = false;
  std::string diagnostic;
  std::optional<HittingSolution> solution;
};

AdaptDecision adapt_decide(const AdaptInstance& inst, std::size_t k, const Rat& t, const Engine& engine);

struct AdaptResult {
  bool feasible = false;  // false: no t up to the search cap works
  Rat lo, hi;             // decision false at lo, true at hi
  std::size_t k = 0;
  std::vector<RatVector> witnesses;  // hitting set of P_hi
  std::optional<HittingSolution> solution;
  std::size_t decisions = 0;
};

/// Bisection on t down to width eps. Without a bracket, doubles outward from
/// [0, 1] until the decision flips (at most 2^`max_doublings`).
AdaptResult adapt_optimize(const AdaptInstance& inst, std::size_t k, const Rat& eps, const Engine& engine,
                           std::optional<std::pair<Rat, Rat>> bracket = std::nullopt, int max_doublings = 64);

}  // namespace polyhit
