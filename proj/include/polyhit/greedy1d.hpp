#pragma once

// Greedy minimum hitting set for one-parameter families of polytopes.
//
// sigma(lambda) is the largest nu in [lambda, beta] with P(lambda) and P(nu)
// intersecting; the chain alpha_i = sigma(alpha_{i-1}) reaches beta after
// exactly k steps when k points are necessary and sufficient.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "polyhit/breakpoints.hpp"
#include "polyhit/family.hpp"
#include "polyhit/realroots.hpp"

namespace polyhit {

/// A member P(lambda) is empty, so no hitting set exists.
class EmptyMemberError : public std::runtime_error {
 public:
  explicit EmptyMemberError(RealValue lambda);
  const RealValue& lambda() const { return lambda_; }

 private:
  RealValue lambda_;
};

/// A visited member is unbounded.
class NotPolytopeError : public std::runtime_error {
 public:
  explicit NotPolytopeError(RealValue lambda);
  const RealValue& lambda() const { return lambda_; }

 private:
  RealValue lambda_;
};

std::string describe(const RealValue& v);

struct Engine {
  enum class Kind { exact, bisect };
  Kind kind = Kind::exact;
  Rat eps;
  Exec exec = Exec::parallel;

  static Engine exact(Exec exec = Exec::parallel) { return Engine{Kind::exact, Rat(0), exec}; }
  static Engine bisect(Rat eps = default_eps()) { return Engine{Kind::bisect, std::move(eps), Exec::parallel}; }
  /// 2^-40.
  static Rat default_eps();
  /// exact for m <= 32, bisect above.
  static Engine default_for(std::size_t m);
};

struct SigmaResult {
  enum class Kind { exact_rational, exact_algebraic, certified };
  Kind kind = Kind::exact_rational;
  Rat value;              // exact_rational
  RealAlgebraic algebraic = RealAlgebraic::rational(0);  // exact_algebraic
  Rat lo, hi, eps;        // certified
  std::vector<Rat> feasible_probes, infeasible_probes;

  bool is_exact() const { return kind != Kind::certified; }
  /// Exact value; throws std::logic_error for certified results.
  RealValue exact() const;
  /// The value the greedy chain continues from: exact value, or lo.
  RealValue chain_value() const;
  std::string to_string() const;
};

SigmaResult sigma(const AffineFamily& family, const RealValue& lambda, const Engine& engine);

struct CoverageReport {
  bool covered = false;
  std::vector<RatInterval> intervals;  // dual interval of each point, in input order
  // first uncovered gap when !covered
  Rat gap_lo, gap_hi;
  bool gap_lo_open = false, gap_hi_open = false;

  std::string gap_string() const;
};

CoverageReport verify(const AffineFamily& family, const std::vector<RatVector>& points);

struct HittingSolution {
  std::size_t k = 0;
  std::vector<RatVector> points;
  std::vector<RatInterval> intervals;
  std::vector<SigmaResult> breakpoints;
  CoverageReport coverage;
};

struct NoHittingSetUpTo {
  std::size_t kmax = 0;
  std::vector<SigmaResult> chain;
};

struct NoFiniteHittingSet {
  RealValue stall = Rat(0);
  bool empty_member = false;  // false: sigma fixpoint below beta
  std::vector<SigmaResult> chain;
};

using HitOutcome = std::variant<HittingSolution, NoHittingSetUpTo, NoFiniteHittingSet>;

/// Runs the sigma chain for at most kmax steps. NotPolytopeError propagates.
HitOutcome hit_size(const AffineFamily& family, std::size_t kmax, const Engine& engine);

struct Decision {
  bool yes = false;
  HitOutcome outcome;
};

Decision decide_hit(const AffineFamily& family, std::size_t k, const Engine& engine);

}  // namespace polyhit
