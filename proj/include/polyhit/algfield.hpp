#pragma once

// Arithmetic in Q(lambda) for a fixed real algebraic lambda.
//
// Elements are residues of rational polynomials modulo a defining polynomial
// of lambda. The modulus starts as the square-free polynomial stored in the
// RealAlgebraic and is replaced by a proper factor whenever a gcd reveals a
// splitting (the factor vanishing at lambda is kept). Signs are decided by
// interval evaluation over the isolating interval, falling back to a gcd zero
// test. Contexts are mutable and not thread-safe: keep one context per thread.

#include <memory>

#include "polyhit/poly.hpp"
#include "polyhit/realroots.hpp"

namespace polyhit {

class AlgContext {
 public:
  explicit AlgContext(const RealAlgebraic& root);

  const QPoly& modulus() const { return modulus_; }
  const RealAlgebraic& root() const { return root_; }

  QPoly reduce(const QPoly& v) const;
  /// Sign of v(lambda).
  int sign(const QPoly& v);
  /// s with s * v = 1 (mod modulus); throws std::domain_error if v(lambda) = 0.
  QPoly inverse(const QPoly& v);

 private:
  // Replaces the modulus by the factor of {g, modulus/g} that vanishes at lambda.
  void split(const QPoly& g);
  int interval_sign(const QPoly& v) const;

  QPoly modulus_;
  RealAlgebraic root_;
};

class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(int v) : v_(QPoly::constant(Rat(v))) {}  // NOLINT(google-explicit-constructor)
  AlgNum(const Rat& v) : v_(QPoly::constant(v)) {}  // NOLINT(google-explicit-constructor)
  AlgNum(std::shared_ptr<AlgContext> ctx, QPoly v);

  /// The generator lambda itself.
  static AlgNum generator(const std::shared_ptr<AlgContext>& ctx);

  const QPoly& residue() const { return v_; }
  const std::shared_ptr<AlgContext>& context() const { return ctx_; }
  bool is_rational() const { return v_.degree() <= 0; }
  Rat rational_value() const { return v_.coeff(0); }

  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const AlgNum& o);
  AlgNum& operator/=(const AlgNum& o);
  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }
  friend AlgNum operator/(AlgNum a, const AlgNum& b) { return a /= b; }
  AlgNum operator-() const { return AlgNum(ctx_, -v_); }

  friend int sign_of(const AlgNum& x);

 private:
  void adopt(const AlgNum& o);
  std::shared_ptr<AlgContext> ctx_;
  QPoly v_;
};

int sign_of(const AlgNum& x);

}  // namespace polyhit
