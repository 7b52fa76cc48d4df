#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyhit {

/// Exact rational number, always kept canonical (gcd 1, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

/// Raised on malformed or dimensionally inconsistent input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is asked for a case it does not handle
/// (wrong parameter dimension, unrestricted domain, ...).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using RatVector = std::vector<Rat>;

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector mul(const RatVector& x) const;
  RatMatrix transposed() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

inline int sign_of(const Rat& q) { return sgn(q); }

Rat dot(const RatVector& a, const RatVector& b);
RatVector axpy(const Rat& alpha, const RatVector& x, const RatVector& y);  // alpha*x + y

/// Parses "num/den", "-7", "3/4" (whitespace not allowed). Throws InputError.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);

/// Decimal rendering rounded half away from zero, `digits` places after the point.
std::string to_decimal(const Rat& q, int digits = 12);

/// Simplest rational (smallest denominator, then smallest |numerator|) in [lo, hi].
Rat simplest_in(const Rat& lo, const Rat& hi);

}  // namespace polyhit
