#pragma once

// Candidate breakpoints for sigma.
//
// For the stacked system  A(lambda) x <= b(lambda),  A(nu) x <= b(nu)  the
// two-endpoint intersection can only switch from feasible to infeasible at a
// value of nu where some r x r minor (r <= d+1) of an augmented row subset
// [A_S(nu) | b_S(nu)] vanishes. These kernels enumerate those minors as
// polynomials in nu. Each kernel has a serial and an OpenMP path that must
// produce the same set.

#include <cstddef>
#include <vector>

#include "polyhit/family.hpp"
#include "polyhit/poly.hpp"
#include "polyhit/realroots.hpp"

namespace polyhit {

enum class Exec { serial, parallel };

/// Minors as polynomials in nu at rational lambda; normalized, square-free,
/// nonconstant, deduplicated and sorted.
std::vector<IntPoly> minor_polynomials(const AffineFamily& family, const Rat& lambda, Exec exec = Exec::parallel);

/// At irrational lambda the minors have coefficients in Q(lambda); each one is
/// replaced by its norm down to Q, whose roots contain the roots of the minor.
/// Minors vanishing identically at lambda are dropped.
std::vector<IntPoly> minor_polynomials(const AffineFamily& family, const RealAlgebraic& lambda,
                                       Exec exec = Exec::parallel);

struct Candidate {
  RealAlgebraic value;
  std::vector<std::size_t> sources;  // indices into the polynomial list
};

/// Distinct real roots of `polys` strictly between lo and hi, ascending.
std::vector<Candidate> roots_between(const std::vector<IntPoly>& polys, const RealValue& lo, const Rat& hi,
                                     Exec exec = Exec::parallel);

}  // namespace polyhit
