#pragma once

// Exact real algebraic numbers: a square-free integer polynomial plus an
// isolating interval (lo, hi] holding exactly one of its real roots.
// Rational values are stored with lo == hi.

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "polyhit/poly.hpp"
#include "polyhit/rational.hpp"

namespace polyhit {

class RealAlgebraic {
 public:
  /// Exact rational value; polynomial den*t - num.
  static RealAlgebraic rational(const Rat& q);
  /// Caller guarantees: poly square-free and normalized, exactly one root in
  /// (lo, hi], and that root is irrational with poly(hi) != 0.
  static RealAlgebraic irrational(IntPoly poly, Rat lo, Rat hi, int index);

  const IntPoly& poly() const { return poly_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  /// 1-based index among the real roots of poly().
  int root_index() const { return index_; }
  bool is_rational() const { return lo_ == hi_; }
  /// Valid only when is_rational().
  const Rat& rational_value() const { return lo_; }

  /// Copy with isolating interval no wider than `width` (no-op for rationals).
  RealAlgebraic refined(const Rat& width) const;
  /// One bisection step.
  RealAlgebraic bisected() const;

  /// Rounded decimal rendering with `digits` places after the point.
  std::string approx(int digits = 12) const;
  double to_double() const;

 private:
  IntPoly poly_;
  Rat lo_, hi_;
  int index_ = 1;
};

/// All distinct real roots in ascending order. Irrational roots come back with
/// isolating intervals of width at most 1/16 (bisection from (-B, B], B a power
/// of two above the Cauchy bound). Throws InputError on the zero polynomial.
std::vector<RealAlgebraic> isolate_roots(const IntPoly& p);

/// Exact sign of p at r.
int sign_at_root(const IntPoly& p, const RealAlgebraic& r);
int sign_at_root(const QPoly& p, const RealAlgebraic& r);

using RealValue = std::variant<Rat, RealAlgebraic>;

std::strong_ordering compare(const RealAlgebraic& a, const RealAlgebraic& b);
std::strong_ordering compare(const RealAlgebraic& a, const Rat& b);
std::strong_ordering compare(const Rat& a, const RealAlgebraic& b);
std::strong_ordering compare(const Rat& a, const Rat& b);
std::strong_ordering compare(const RealValue& a, const RealValue& b);

/// Rational strictly between a < b: midpoint of refined bounds.
Rat rational_between(const RealAlgebraic& a, const RealAlgebraic& b);
Rat rational_between(const RealValue& a, const RealValue& b);

RealAlgebraic to_algebraic(const RealValue& v);

/// Tight rational bounds lo <= r <= hi with hi - lo <= width.
std::pair<Rat, Rat> bracket(const RealAlgebraic& r, const Rat& width);

}  // namespace polyhit
