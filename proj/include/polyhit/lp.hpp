#pragma once

// Exact linear programming over an ordered field.
//
// Every problem is solved through its dual in standard form
//     min c^T y   s.t.  K y = h,  y >= 0
// where K has (d or d+1) rows and one column per inequality. With d small and
// many inequalities this keeps the tableau tiny. Pivoting uses Bland's rule, so
// results are deterministic. The scalar type F must be a field with exact
// arithmetic and a `sign_of(const F&)` overload visible by lookup.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polyhit/family.hpp"
#include "polyhit/rational.hpp"

namespace polyhit {

enum class LpStatus { feasible, infeasible, unbounded, optimal };

const char* to_string(LpStatus s);

/// Outcome of an LP call. Meaning of `point` depends on status:
///  feasible / optimal -> witness x with A x <= b
///  infeasible         -> Farkas multipliers y >= 0, y^T A = 0, y^T b < 0
///  unbounded          -> ray r with A r <= 0, c^T r > 0
template <class F>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<F> point;
  F value{};  // optimal objective (optimal status only)
};

using LpOutcome = LpResult<Rat>;

/// Dense inequality system over F, rows of `a` are constraint normals.
template <class F>
struct BasicSystem {
  std::vector<std::vector<F>> a;
  std::vector<F> b;
  std::size_t dim = 0;
};

namespace detail {

template <class F>
bool is_zero(const F& x) {
  return sign_of(x) == 0;
}

template <class F>
struct StandardForm {
  enum class Kind { infeasible, unbounded, optimal };
  Kind kind = Kind::optimal;
  std::vector<F> y;     // optimal point
  std::vector<F> dual;  // simplex multipliers; phase-one multipliers if infeasible
  std::vector<F> ray;   // improving direction if unbounded
};

template <class F>
class Tableau {
 public:
  // k: rows x n, given column-wise accessible as k[row][col].
  Tableau(const std::vector<std::vector<F>>& k, const std::vector<F>& h, std::size_t n)
      : rows_(k.size()), n_(n), width_(n + k.size() + 1), t_(k.size()), flip_(k.size(), 1), basis_(k.size()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      flip_[i] = sign_of(h[i]) < 0 ? -1 : 1;
      auto& row = t_[i];
      row.assign(width_, F(0));
      for (std::size_t j = 0; j < n_; ++j) row[j] = flip_[i] < 0 ? F(-k[i][j]) : k[i][j];
      row[n_ + i] = F(1);
      row[width_ - 1] = flip_[i] < 0 ? F(-h[i]) : h[i];
      basis_[i] = n_ + i;
    }
  }

  StandardForm<F> solve(const std::vector<F>& c) {
    StandardForm<F> out;
    std::vector<F> phase1(n_ + rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i) phase1[n_ + i] = F(1);
    std::size_t col = 0;
    run(phase1, col);  // phase one is bounded below by zero
    F infeas(0);
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] >= n_) infeas += rhs(i);
    if (sign_of(infeas) > 0) {
      out.kind = StandardForm<F>::Kind::infeasible;
      out.dual = multipliers(phase1);
      return out;
    }
    drive_out_artificials();

    std::vector<F> phase2(n_ + rows_, F(0));
    for (std::size_t j = 0; j < n_; ++j) phase2[j] = c[j];
    if (!run(phase2, col)) {
      out.kind = StandardForm<F>::Kind::unbounded;
      out.ray.assign(n_, F(0));
      out.ray[col] = F(1);
      for (std::size_t i = 0; i < rows_; ++i)
        if (basis_[i] < n_) out.ray[basis_[i]] = -t_[i][col];
      return out;
    }
    out.kind = StandardForm<F>::Kind::optimal;
    out.y.assign(n_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < n_) out.y[basis_[i]] = rhs(i);
    out.dual = multipliers(phase2);
    return out;
  }

 private:
  const F& rhs(std::size_t i) const { return t_[i][width_ - 1]; }

  // Multipliers pi = c_B^T B^{-1}, mapped back through the row flips.
  std::vector<F> multipliers(const std::vector<F>& cost) const {
    std::vector<F> pi(rows_, F(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      const F& cb = cost[basis_[r]];
      if (is_zero(cb)) continue;
      for (std::size_t i = 0; i < rows_; ++i) pi[i] += cb * t_[r][n_ + i];
    }
    for (std::size_t i = 0; i < rows_; ++i)
      if (flip_[i] < 0) pi[i] = -pi[i];
    return pi;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    auto& prow = t_[pr];
    const F inv = F(1) / prow[pc];
    for (auto& v : prow) v *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pr) continue;
      auto& row = t_[i];
      if (is_zero(row[pc])) continue;
      const F factor = row[pc];
      for (std::size_t j = 0; j < width_; ++j) row[j] -= factor * prow[j];
    }
    basis_[pr] = pc;
  }

  // Rows whose artificial stays basic after this are linearly dependent on the
  // others and never change again.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!is_zero(t_[i][j])) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  // Bland's rule. Returns false (and the entering column) when unbounded.
  bool run(const std::vector<F>& cost, std::size_t& entering_out) {
    for (;;) {
      std::size_t entering = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        F rc = cost[j];
        for (std::size_t i = 0; i < rows_; ++i) {
          const F& cb = cost[basis_[i]];
          if (!is_zero(cb) && !is_zero(t_[i][j])) rc -= cb * t_[i][j];
        }
        if (sign_of(rc) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == n_) return true;

      std::size_t leave = rows_;
      for (std::size_t i = 0; i < rows_; ++i) {
        const F& a = t_[i][entering];
        if (sign_of(a) <= 0) continue;
        if (leave == rows_) {
          leave = i;
          continue;
        }
        // compare rhs_i / a  with  rhs_leave / t_[leave][entering]
        int cmp = sign_of(F(rhs(i) * t_[leave][entering] - rhs(leave) * a));
        if (cmp < 0 || (cmp == 0 && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == rows_) {
        entering_out = entering;
        return false;
      }
      pivot(leave, entering);
    }
  }

  std::size_t rows_, n_, width_;
  std::vector<std::vector<F>> t_;
  std::vector<int> flip_;
  std::vector<std::size_t> basis_;
};

template <class F>
StandardForm<F> solve_standard_form(const std::vector<std::vector<F>>& k, const std::vector<F>& h,
                                    const std::vector<F>& c) {
  Tableau<F> tab(k, h, c.size());
  return tab.solve(c);
}

template <class F>
F row_dot(const std::vector<F>& row, const std::vector<F>& x) {
  F acc(0);
  for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
  return acc;
}

}  // namespace detail

/// Decides A x <= b. Feasible results carry a witness, infeasible ones a Farkas vector.
template <class F>
LpResult<F> lp_feasible(const BasicSystem<F>& sys) {
  const std::size_t n = sys.a.size(), d = sys.dim;
  LpResult<F> out;
  for (std::size_t i = 0; i < n; ++i) {
    bool zero_row = true;
    for (const auto& v : sys.a[i])
      if (!detail::is_zero(v)) {
        zero_row = false;
        break;
      }
    if (zero_row && sign_of(sys.b[i]) < 0) {
      out.status = LpStatus::infeasible;
      out.point.assign(n, F(0));
      out.point[i] = F(1);
      return out;
    }
  }
  // dual: min b^T y  s.t.  A^T y = 0, 1^T y = 1, y >= 0
  std::vector<std::vector<F>> k(d + 1, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) k[j][i] = sys.a[i][j];
    k[d][i] = F(1);
  }
  std::vector<F> h(d + 1, F(0));
  h[d] = F(1);
  auto sf = detail::solve_standard_form(k, h, sys.b);
  using Kind = typename detail::StandardForm<F>::Kind;
  if (sf.kind == Kind::infeasible) {
    // No y at all: pi = (x, z) with A x <= -z < 0, so a large multiple of x is feasible.
    std::vector<F> x(sf.dual.begin(), sf.dual.begin() + static_cast<std::ptrdiff_t>(d));
    F scale(0);
    for (std::size_t i = 0; i < n; ++i) {
      F ax = detail::row_dot(sys.a[i], x);
      F need = sys.b[i] / ax;
      if (sign_of(F(need - scale)) > 0) scale = need;
    }
    for (auto& v : x) v *= scale;
    out.status = LpStatus::feasible;
    out.point = std::move(x);
    return out;
  }
  if (sf.kind == Kind::unbounded) throw std::logic_error("lp_feasible: bounded dual reported unbounded");
  F value = detail::row_dot(sys.b, sf.y);
  if (sign_of(value) < 0) {
    out.status = LpStatus::infeasible;
    out.point = std::move(sf.y);
    return out;
  }
  out.status = LpStatus::feasible;
  out.point.assign(sf.dual.begin(), sf.dual.begin() + static_cast<std::ptrdiff_t>(d));
  return out;
}

/// Maximizes c^T x over A x <= b.
template <class F>
LpResult<F> lp_optimize(const std::vector<F>& c, const BasicSystem<F>& sys) {
  const std::size_t n = sys.a.size(), d = sys.dim;
  if (c.size() != d) throw InputError("lp_optimize: objective dimension mismatch");
  std::vector<std::vector<F>> k(d, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) k[j][i] = sys.a[i][j];
  auto sf = detail::solve_standard_form(k, c, sys.b);
  using Kind = typename detail::StandardForm<F>::Kind;
  LpResult<F> out;
  if (sf.kind == Kind::infeasible) {
    // dual infeasible: the phase-one multipliers form an improving ray
    auto feas = lp_feasible(sys);
    if (feas.status == LpStatus::infeasible) return feas;
    out.status = LpStatus::unbounded;
    out.point = std::move(sf.dual);
    return out;
  }
  if (sf.kind == Kind::unbounded) {
    out.status = LpStatus::infeasible;
    out.point = std::move(sf.ray);
    return out;
  }
  out.status = LpStatus::optimal;
  out.point = std::move(sf.dual);
  out.value = detail::row_dot(c, out.point);
  return out;
}

/// True iff {x : A x <= 0} = {0}; 2d optimizations over the homogenized system.
template <class F>
bool check_bounded(const BasicSystem<F>& sys) {
  BasicSystem<F> hom{sys.a, std::vector<F>(sys.a.size(), F(0)), sys.dim};
  for (std::size_t j = 0; j < sys.dim; ++j) {
    for (int s : {1, -1}) {
      std::vector<F> c(sys.dim, F(0));
      c[j] = F(s);
      if (lp_optimize(c, hom).status == LpStatus::unbounded) return false;
    }
  }
  return true;
}

BasicSystem<Rat> to_basic(const HalfspaceSystem& sys);

// Rational entry points. When certificate auditing is on, every result is
// checked by the independent verifier before it is returned.
LpOutcome lp_feasible(const HalfspaceSystem& sys);
LpOutcome lp_optimize(const RatVector& c, const HalfspaceSystem& sys);
bool check_bounded(const HalfspaceSystem& sys);

}  // namespace polyhit
