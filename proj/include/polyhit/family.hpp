#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "polyhit/rational.hpp"

namespace polyhit {

/// A(w) = base + sum_i w_i * slopes[i]; every matrix is m x d.
struct AffineMatrixMap {
  RatMatrix base;
  std::vector<RatMatrix> slopes;

  std::size_t rows() const { return base.rows(); }
  std::size_t cols() const { return base.cols(); }
  std::size_t params() const { return slopes.size(); }
  RatMatrix at(const RatVector& w) const;
  void validate() const;
};

/// b(w) = base + sum_i w_i * slopes[i]; every vector has length m.
struct AffineVectorMap {
  RatVector base;
  std::vector<RatVector> slopes;

  std::size_t size() const { return base.size(); }
  std::size_t params() const { return slopes.size(); }
  RatVector at(const RatVector& w) const;
  void validate() const;
};

struct IntervalDomain {
  Rat alpha;
  Rat beta;
};

struct VertexDomain {
  std::vector<RatVector> vertices;
};

/// All of R^p. Produced by duality; callers restrict explicitly.
struct Unrestricted {};

class ParameterDomain {
 public:
  using Storage = std::variant<IntervalDomain, VertexDomain, Unrestricted>;

  static ParameterDomain interval(Rat alpha, Rat beta);
  static ParameterDomain vertices(std::vector<RatVector> vs);
  static ParameterDomain unrestricted(std::size_t dim);

  /// Dimension p of the parameter space.
  std::size_t dim() const { return dim_; }
  bool is_interval() const { return std::holds_alternative<IntervalDomain>(storage_); }
  bool is_vertices() const { return std::holds_alternative<VertexDomain>(storage_); }
  bool is_unrestricted() const { return std::holds_alternative<Unrestricted>(storage_); }
  const IntervalDomain& as_interval() const;
  const VertexDomain& as_vertices() const;
  const Storage& storage() const { return storage_; }

  /// Finite generating set: {alpha, beta} or the vertex list. Throws Unsupported if unrestricted.
  std::vector<RatVector> generators() const;

  friend bool operator==(const ParameterDomain& a, const ParameterDomain& b);

 private:
  ParameterDomain(Storage s, std::size_t dim) : storage_(std::move(s)), dim_(dim) {}
  Storage storage_;
  std::size_t dim_ = 0;
};

/// Concrete system A x <= b.
struct HalfspaceSystem {
  RatMatrix a;
  RatVector b;

  std::size_t rows() const { return a.rows(); }
  std::size_t dim() const { return a.cols(); }
  void validate() const;
  /// Rows of `other` appended below this system's rows.
  HalfspaceSystem stacked(const HalfspaceSystem& other) const;
};

/// Closed interval of parameters, or empty.
class RatInterval {
 public:
  static RatInterval empty() { return RatInterval(); }
  static RatInterval closed(Rat lo, Rat hi);

  bool is_empty() const { return !bounds_.has_value(); }
  const Rat& lo() const { return bounds_->first; }
  const Rat& hi() const { return bounds_->second; }
  bool contains(const Rat& w) const { return bounds_ && lo() <= w && w <= hi(); }

  friend bool operator==(const RatInterval& a, const RatInterval& b) { return a.bounds_ == b.bounds_; }

 private:
  RatInterval() = default;
  std::optional<std::pair<Rat, Rat>> bounds_;
};

/// The object P(Omega): members {x in R^d : A(w) x <= b(w)} for w in Omega.
class AffineFamily {
 public:
  AffineFamily(AffineMatrixMap a, AffineVectorMap b, ParameterDomain domain);

  const AffineMatrixMap& a() const { return a_; }
  const AffineVectorMap& b() const { return b_; }
  const ParameterDomain& domain() const { return domain_; }

  std::size_t m() const { return a_.rows(); }
  std::size_t d() const { return a_.cols(); }
  std::size_t p() const { return a_.params(); }

  /// Interval bounds; throws Unsupported unless p == 1 with an interval domain.
  const IntervalDomain& interval() const;

  friend bool operator==(const AffineFamily& x, const AffineFamily& y) {
    return x.a_.base == y.a_.base && x.a_.slopes == y.a_.slopes && x.b_.base == y.b_.base &&
           x.b_.slopes == y.b_.slopes && x.domain_ == y.domain_;
  }

 private:
  AffineMatrixMap a_;
  AffineVectorMap b_;
  ParameterDomain domain_;
};

/// P(w) as a concrete system. `w` need not lie in the domain.
HalfspaceSystem member_eval(const AffineFamily& family, const RatVector& omega);

/// Exact test a_i . x <= b_i for every row.
bool membership(const RatVector& x, const HalfspaceSystem& sys);

/// Family over parameter x in R^d whose member at x is {w : A(w) x <= b(w)}.
AffineFamily dual_family(const AffineFamily& family);

/// {w in [alpha, beta] : x in P(w)} for a one-parameter interval family.
RatInterval dual_interval(const AffineFamily& family, const RatVector& x);

AffineFamily restrict_domain(const AffineFamily& family, const ParameterDomain& domain);

}  // namespace polyhit
