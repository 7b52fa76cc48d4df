#pragma once

// Dense univariate polynomials, coefficients lowest degree first.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polyhit/rational.hpp"

namespace polyhit {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  static QPoly constant(const Rat& c);
  /// a0 + a1 t
  static QPoly linear(const Rat& a0, const Rat& a1);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lead() const { return c_.back(); }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  Rat eval(const Rat& x) const;
  QPoly derivative() const;
  QPoly monic() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rat& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rat& s) { return a *= s; }
  QPoly operator-() const;
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder; throws InputError on division by zero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly rem(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
/// Returns (g, s) with g = gcd(a, m) monic and s*a = g (mod m).
std::pair<QPoly, QPoly> gcd_with_inverse(const QPoly& a, const QPoly& m);

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  /// Primitive integer multiple of q with the same sign (positive scaling only).
  static IntPoly primitive_of(const QPoly& q);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& lead() const { return c_.back(); }

  QPoly to_q() const;
  /// Sign of p(x), exact.
  int sign_at(const Rat& x) const;
  Rat eval(const Rat& x) const;
  IntPoly derivative() const;
  /// Primitive, positive leading coefficient.
  IntPoly normalized() const;
  /// Normalized square-free part p / gcd(p, p').
  IntPoly squarefree() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Int> c_;
};

/// Sturm sequence of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);
  int variations(const Rat& x) const;
  /// Number of distinct real roots in (lo, hi].
  int count(const Rat& lo, const Rat& hi) const { return variations(lo) - variations(hi); }

 private:
  std::vector<IntPoly> seq_;
};

/// Power of two B with every real root of p in (-B, B).
Rat root_bound(const IntPoly& p);

}  // namespace polyhit
