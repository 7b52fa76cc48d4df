#pragma once

// Lifting for k-adaptability with first-stage variables.
//
// L(x_f, w) = (x_f, w, w_1 x_f, ..., w_p x_f) in R^D, D = ell + p + ell p.
// With it, (x_f, x_s) lies in P_t(w) iff L(x_f, w) lies in Qhat_t(x_s), where
// Qhat_t is an affine family over the second-stage point x_s. The image of
// {x_f} x Omega is recorded symbolically; nothing here solves the lifted problem.

#include <cstddef>
#include <vector>

#include "polyhit/adaptability.hpp"
#include "polyhit/family.hpp"

namespace polyhit {

/// z[product] = z[left] * z[right] (0-based coordinates in R^D).
struct SurfaceRelation {
  std::size_t product, left, right;
};

/// x_f -> L(x_f, v) for a fixed domain generator v: matrix (D x ell) plus offset.
struct LiftedVertex {
  RatVector omega;
  RatMatrix linear;
  RatVector offset;
};

struct LiftOutput {
  std::size_t ell = 0, p = 0, dim = 0;
  AffineFamily q_hat;  // ambient R^D, parameter x_s, unrestricted domain
  std::vector<LiftedVertex> p_hat_vertices;
  std::vector<SurfaceRelation> surface;

  RatVector lift_point(const RatVector& x_f, const RatVector& omega) const;
};

/// Throws Unsupported when the instance has no first stage (ell = 0).
LiftOutput lift_instance(const AdaptInstance& inst, const Rat& t);

}  // namespace polyhit
