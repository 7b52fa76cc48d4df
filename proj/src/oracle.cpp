#include "polyhit/oracle.hpp"

#include <atomic>

#include "polyhit/greedy1d.hpp"
#include "polyhit/lp.hpp"

namespace polyhit {

std::vector<Rat> grid_points(const AffineFamily& family, const GridSpec& grid) {
  const auto& iv = family.interval();
  if (grid.resolution < 2) throw InputError("grid resolution must be at least 2");
  std::vector<Rat> out(grid.resolution);
  const Rat step = (iv.beta - iv.alpha) / Rat(static_cast<long>(grid.resolution - 1));
  for (std::size_t j = 0; j < grid.resolution; ++j) out[j] = iv.alpha + step * static_cast<long>(j);
  return out;
}

namespace {

bool pair_feasible(const AffineFamily& family, const Rat& a, const Rat& b, RatVector* witness) {
  LpOutcome res = lp_feasible(member_eval(family, {a}).stacked(member_eval(family, {b})));
  if (res.status != LpStatus::feasible) return false;
  if (witness) *witness = std::move(res.point);
  return true;
}

}  // namespace

GridCover grid_hit_cover(const AffineFamily& family, const GridSpec& grid, Exec exec) {
  const std::vector<Rat> w = grid_points(family, grid);
  const std::size_t n = w.size();

  std::vector<char> empty(n, 0);
  if (exec == Exec::serial) {
    for (std::size_t j = 0; j < n; ++j) empty[j] = lp_feasible(member_eval(family, {w[j]})).status != LpStatus::feasible;
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t j = 0; j < n; ++j) empty[j] = lp_feasible(member_eval(family, {w[j]})).status != LpStatus::feasible;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (empty[j]) throw EmptyMemberError(w[j]);

  GridCover out;
  std::size_t a = 0;
  while (a < n) {
    // feasibility of samples a and b together is monotone in b
    std::size_t lo = a, hi = n;  // lo feasible, hi infeasible (or past the end)
    while (hi - lo > 1) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (pair_feasible(family, w[a], w[mid], nullptr))
        lo = mid;
      else
        hi = mid;
    }
    RatVector x;
    pair_feasible(family, w[a], w[lo], &x);
    RatInterval iv = dual_interval(family, x);
    out.witnesses.push_back(x);
    out.intervals.push_back(iv);
    ++out.count;
    std::size_t next = lo + 1;
    while (next < n && w[next] <= iv.hi()) ++next;
    a = next;
  }
  return out;
}

std::size_t grid_hit_size(const AffineFamily& family, const GridSpec& grid, Exec exec) {
  return grid_hit_cover(family, grid, exec).count;
}

RatBracket bisect_sigma_oracle(const AffineFamily& family, const Rat& lambda, const Rat& eps) {
  const auto& iv = family.interval();
  if (lambda < iv.alpha || lambda > iv.beta) throw InputError("oracle: lambda outside [alpha, beta]");
  if (sgn(eps) <= 0) throw InputError("oracle: eps must be positive");
  HalfspaceSystem base = member_eval(family, {lambda});
  if (lp_feasible(base).status != LpStatus::feasible) throw EmptyMemberError(lambda);
  if (!check_bounded(base)) throw NotPolytopeError(lambda);
  if (pair_feasible(family, lambda, iv.beta, nullptr)) return {iv.beta, iv.beta};
  RatBracket br{lambda, iv.beta};
  while (br.hi - br.lo > eps) {
    Rat mid = (br.lo + br.hi) / 2;
    if (pair_feasible(family, lambda, mid, nullptr))
      br.lo = mid;
    else
      br.hi = mid;
  }
  return br;
}

bool sample_verify(const AffineFamily& family, const std::vector<RatVector>& points, const GridSpec& grid,
                   Exec exec) {
  const std::vector<Rat> w = grid_points(family, grid);
  for (const auto& x : points)
    if (x.size() != family.d()) throw InputError("sample_verify: point dimension mismatch");
  auto hit = [&](std::size_t j) {
    HalfspaceSystem sys = member_eval(family, {w[j]});
    for (const auto& x : points)
      if (membership(x, sys)) return true;
    return false;
  };
  if (exec == Exec::serial) {
    for (std::size_t j = 0; j < w.size(); ++j)
      if (!hit(j)) return false;
    return true;
  }
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(static)
  for (std::size_t j = 0; j < w.size(); ++j)
    if (ok.load(std::memory_order_relaxed) && !hit(j)) ok.store(false, std::memory_order_relaxed);
  return ok.load();
}

}  // namespace polyhit
