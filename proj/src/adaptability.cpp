#include "polyhit/adaptability.hpp"

namespace polyhit {

void AdaptInstance::validate() const {
  a_s.validate();
  b.validate();
  c_s.validate();
  if (b.size() != m()) throw InputError("adapt: b length differs from A_s rows");
  if (c_s.size() != d_s()) throw InputError("adapt: c_s length differs from A_s columns");
  if (b.params() != p() || c_s.params() != p()) throw InputError("adapt: parameter counts disagree");
  if (omega.dim() != p()) throw InputError("adapt: domain dimension differs from parameter count");
  if (!box.empty() && box.size() != d_s()) throw InputError("adapt: box needs one bound pair per variable");
  for (const auto& [lo, hi] : box)
    if (lo > hi) throw InputError("adapt: box with lo > hi");
  if (first) {
    first->a_f.validate();
    if (first->a_f.rows() != m() || first->a_f.cols() != first->ell || first->a_f.params() != p())
      throw InputError("adapt: first-stage matrix has wrong shape");
    if (first->c_f.size() != first->ell) throw InputError("adapt: c_f length differs from ell");
  }
}

bool operator==(const AdaptInstance& x, const AdaptInstance& y) {
  auto same_m = [](const AffineMatrixMap& a, const AffineMatrixMap& b) {
    return a.base == b.base && a.slopes == b.slopes;
  };
  auto same_v = [](const AffineVectorMap& a, const AffineVectorMap& b) {
    return a.base == b.base && a.slopes == b.slopes;
  };
  if (!same_m(x.a_s, y.a_s) || !same_v(x.b, y.b) || !same_v(x.c_s, y.c_s) || !(x.omega == y.omega) ||
      x.box != y.box || x.first.has_value() != y.first.has_value())
    return false;
  if (!x.first) return true;
  return x.first->ell == y.first->ell && same_m(x.first->a_f, y.first->a_f) && x.first->c_f == y.first->c_f;
}

AffineFamily build_pt(const AdaptInstance& inst, const Rat& t) {
  inst.validate();
  if (inst.ell() > 0) throw Unsupported("build_pt needs ell = 0; use lift_instance for first-stage decisions");
  const std::size_t m = inst.m(), d = inst.d_s(), p = inst.p();
  const std::size_t rows = m + 1 + 2 * inst.box.size();
  AffineMatrixMap a{RatMatrix(rows, d), std::vector<RatMatrix>(p, RatMatrix(rows, d))};
  AffineVectorMap b{RatVector(rows), std::vector<RatVector>(p, RatVector(rows))};
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      a.base(r, c) = inst.a_s.base(r, c);
      for (std::size_t i = 0; i < p; ++i) a.slopes[i](r, c) = inst.a_s.slopes[i](r, c);
    }
    b.base[r] = inst.b.base[r];
    for (std::size_t i = 0; i < p; ++i) b.slopes[i][r] = inst.b.slopes[i][r];
  }
  for (std::size_t c = 0; c < d; ++c) {
    a.base(m, c) = inst.c_s.base[c];
    for (std::size_t i = 0; i < p; ++i) a.slopes[i](m, c) = inst.c_s.slopes[i][c];
  }
  b.base[m] = t;
  for (std::size_t j = 0; j < inst.box.size(); ++j) {
    const std::size_t r = m + 1 + 2 * j;
    a.base(r, j) = 1;
    b.base[r] = inst.box[j].second;
    a.base(r + 1, j) = -1;
    b.base[r + 1] = -inst.box[j].first;
  }
  return AffineFamily(std::move(a), std::move(b), inst.omega);
}

HalfspaceSystem pt_member(const AdaptInstance& inst, const Rat& t, const RatVector& omega) {
  inst.validate();
  const std::size_t m = inst.m(), ds = inst.d_s(), ell = inst.ell();
  const std::size_t rows = m + 1 + 2 * inst.box.size();
  RatMatrix as = inst.a_s.at(omega);
  RatVector bs = inst.b.at(omega);
  RatVector cs = inst.c_s.at(omega);
  HalfspaceSystem sys{RatMatrix(rows, ell + ds), RatVector(rows)};
  if (inst.first) {
    RatMatrix af = inst.first->a_f.at(omega);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < ell; ++c) sys.a(r, c) = af(r, c);
    for (std::size_t c = 0; c < ell; ++c) sys.a(m, c) = inst.first->c_f[c];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < ds; ++c) sys.a(r, ell + c) = as(r, c);
    sys.b[r] = bs[r];
  }
  for (std::size_t c = 0; c < ds; ++c) sys.a(m, ell + c) = cs[c];
  sys.b[m] = t;
  for (std::size_t j = 0; j < inst.box.size(); ++j) {
    const std::size_t r = m + 1 + 2 * j;
    sys.a(r, ell + j) = 1;
    sys.b[r] = inst.box[j].second;
    sys.a(r + 1, ell + j) = -1;
    sys.b[r + 1] = -inst.box[j].first;
  }
  return sys;
}

AdaptDecision adapt_decide(const AdaptInstance& inst, std::size_t k, const Rat& t, const Engine& engine) {
  AffineFamily fam = build_pt(inst, t);
  fam.interval();  // p = 1 with an interval domain
  AdaptDecision out;
  Decision d = decide_hit(fam, k, engine);
  out.yes = d.yes;
  if (auto* sol = std::get_if<HittingSolution>(&d.outcome)) {
    out.solution = std::move(*sol);
  } else if (auto* nf = std::get_if<NoFiniteHittingSet>(&d.outcome)) {
    out.empty_member = nf->empty_member;
    out.diagnostic = nf->empty_member ? "empty member at w = " + describe(nf->stall) + ": problem infeasible at this t"
                                      : "sigma stalls at w = " + describe(nf->stall);
  } else {
    out.diagnostic = "more than " + std::to_string(k) + " points needed";
  }
  return out;
}

AdaptResult adapt_optimize(const AdaptInstance& inst, std::size_t k, const Rat& eps, const Engine& engine,
                           std::optional<std::pair<Rat, Rat>> bracket, int max_doublings) {
  if (sgn(eps) <= 0) throw InputError("adapt_optimize: eps must be positive");
  AdaptResult out;
  out.k = k;
  std::optional<HittingSolution> at_hi;
  auto decide = [&](const Rat& t) {
    ++out.decisions;
    AdaptDecision d = adapt_decide(inst, k, t, engine);
    if (d.yes) at_hi = d.solution;
    return d.yes;
  };

  Rat lo, hi;
  if (bracket) {
    lo = bracket->first;
    hi = bracket->second;
    if (lo >= hi) throw InputError("adapt_optimize: bracket needs lo < hi");
    if (decide(lo)) throw InputError("adapt_optimize: decision already true at bracket lo");
    if (!decide(hi)) return out;
  } else if (decide(0)) {
    hi = 0;
    lo = -1;
    int n = 0;
    while (decide(lo)) {
      hi = lo;
      lo *= 2;
      if (++n > max_doublings) throw InputError("adapt_optimize: value unbounded below");
    }
  } else {
    lo = 0;
    hi = 1;
    int n = 0;
    while (!decide(hi)) {
      lo = hi;
      hi *= 2;
      if (++n > max_doublings) {
        out.lo = lo;
        out.hi = hi;
        return out;
      }
    }
  }
  std::optional<HittingSolution> best = at_hi;
  while (hi - lo > eps) {
    Rat mid = (lo + hi) / 2;
    if (decide(mid)) {
      hi = mid;
      best = at_hi;
    } else {
      lo = mid;
    }
  }
  out.feasible = true;
  out.lo = lo;
  out.hi = hi;
  out.solution = best;
  if (best) out.witnesses = best->points;
  return out;
}

}  // namespace polyhit
