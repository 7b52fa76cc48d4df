#include "polyhit/greedy1d.hpp"

#include <algorithm>
#include <memory>

#include "polyhit/algfield.hpp"
#include "polyhit/certificates.hpp"
#include "polyhit/lp.hpp"

namespace polyhit {

std::string describe(const RealValue& v) {
  if (const Rat* q = std::get_if<Rat>(&v)) return to_string(*q);
  const auto& r = std::get<RealAlgebraic>(v);
  return r.approx() + " (root of " + r.poly().to_string() + " in (" + to_string(r.lo()) + ", " +
         to_string(r.hi()) + "])";
}

EmptyMemberError::EmptyMemberError(RealValue lambda)
    : std::runtime_error("empty member P(" + describe(lambda) + ")"), lambda_(std::move(lambda)) {}

NotPolytopeError::NotPolytopeError(RealValue lambda)
    : std::runtime_error("member P(" + describe(lambda) + ") is unbounded, not a polytope"),
      lambda_(std::move(lambda)) {}

Rat Engine::default_eps() { return Rat(Int(1), Int(1) << 40); }

Engine Engine::default_for(std::size_t m) { return m <= 32 ? exact() : bisect(); }

RealValue SigmaResult::exact() const {
  switch (kind) {
    case Kind::exact_rational: return value;
    case Kind::exact_algebraic: return algebraic;
    case Kind::certified: break;
  }
  throw std::logic_error("certified sigma has no exact value");
}

RealValue SigmaResult::chain_value() const { return is_exact() ? exact() : RealValue(lo); }

std::string SigmaResult::to_string() const {
  switch (kind) {
    case Kind::exact_rational: return polyhit::to_string(value);
    case Kind::exact_algebraic: return describe(algebraic);
    case Kind::certified: return "[" + polyhit::to_string(lo) + ", " + polyhit::to_string(hi) + "]";
  }
  return "?";
}

namespace {

// Feasibility of P(lambda) and P(q) together, for fixed lambda.
class PairProbe {
 public:
  PairProbe(const AffineFamily& family, const RealValue& lambda) : family_(family), lambda_(lambda) {
    if (const Rat* q = std::get_if<Rat>(&lambda)) {
      rat_member_ = member_eval(family, {*q});
      return;
    }
    ctx_ = std::make_shared<AlgContext>(std::get<RealAlgebraic>(lambda));
    const AlgNum t = AlgNum::generator(ctx_);
    const std::size_t m = family.m(), d = family.d();
    alg_member_.dim = d;
    alg_member_.a.assign(m, std::vector<AlgNum>(d));
    alg_member_.b.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < d; ++c)
        alg_member_.a[r][c] = AlgNum(family.a().base(r, c)) + t * AlgNum(family.a().slopes[0](r, c));
      alg_member_.b[r] = AlgNum(family.b().base[r]) + t * AlgNum(family.b().slopes[0][r]);
    }
  }

  bool rational() const { return !ctx_; }

  // Throws EmptyMemberError / NotPolytopeError for P(lambda).
  void check_member() {
    if (rational()) {
      if (lp_feasible(rat_member_).status == LpStatus::infeasible) throw EmptyMemberError(lambda_);
      if (!check_bounded(rat_member_)) throw NotPolytopeError(lambda_);
      return;
    }
    if (audited_feasible(alg_member_).status == LpStatus::infeasible) throw EmptyMemberError(lambda_);
    if (!audited_check_bounded(alg_member_)) throw NotPolytopeError(lambda_);
  }

  bool feasible(const Rat& q) {
    HalfspaceSystem other = member_eval(family_, {q});
    if (rational()) return lp_feasible(rat_member_.stacked(other)).status == LpStatus::feasible;
    BasicSystem<AlgNum> sys = alg_member_;
    for (std::size_t r = 0; r < other.rows(); ++r) {
      std::vector<AlgNum> row(other.dim());
      for (std::size_t c = 0; c < other.dim(); ++c) row[c] = AlgNum(other.a(r, c));
      sys.a.push_back(std::move(row));
      sys.b.push_back(AlgNum(other.b[r]));
    }
    return audited_feasible(sys).status == LpStatus::feasible;
  }

 private:
  const AffineFamily& family_;
  RealValue lambda_;
  HalfspaceSystem rat_member_;
  std::shared_ptr<AlgContext> ctx_;
  BasicSystem<AlgNum> alg_member_;
};

SigmaResult exact_rational(const Rat& v) {
  SigmaResult out;
  out.kind = SigmaResult::Kind::exact_rational;
  out.value = v;
  return out;
}

SigmaResult exact_value(const RealValue& v) {
  if (const Rat* q = std::get_if<Rat>(&v)) return exact_rational(*q);
  const auto& r = std::get<RealAlgebraic>(v);
  if (r.is_rational()) return exact_rational(r.rational_value());
  SigmaResult out;
  out.kind = SigmaResult::Kind::exact_algebraic;
  out.algebraic = r;
  return out;
}

// Representation of `v` over the gcd of the polynomials it came from.
SigmaResult canonical(const Candidate& c, const std::vector<IntPoly>& polys) {
  if (c.value.is_rational()) return exact_rational(c.value.rational_value());
  QPoly g;
  for (std::size_t s : c.sources) g = g.is_zero() ? polys[s].to_q() : gcd(g, polys[s].to_q());
  IntPoly gp = IntPoly::primitive_of(g).normalized();
  for (auto& r : isolate_roots(gp))
    if (compare(r, c.value) == 0) return exact_value(r);
  return exact_value(c.value);  // unreachable: c.value is a root of every source
}

SigmaResult sigma_exact(const AffineFamily& family, const RealValue& lambda, PairProbe& probe,
                        const Engine& engine) {
  const Rat& beta = family.interval().beta;
  SigmaResult out;
  if (probe.feasible(beta)) {
    out = exact_rational(beta);
    out.feasible_probes.push_back(beta);
    return out;
  }
  std::vector<Rat> feas, infeas{beta};

  std::vector<IntPoly> polys = std::holds_alternative<Rat>(lambda)
                                   ? minor_polynomials(family, std::get<Rat>(lambda), engine.exec)
                                   : minor_polynomials(family, std::get<RealAlgebraic>(lambda), engine.exec);
  std::vector<Candidate> cands = roots_between(polys, lambda, beta, engine.exec);
  const std::size_t n = cands.size();
  auto probe_at = [&](std::size_t j) {
    RealValue lower = j == 0 ? lambda : RealValue(cands[j - 1].value);
    RealValue upper = j == n ? RealValue(beta) : RealValue(cands[j].value);
    return rational_between(lower, upper);
  };
  auto test = [&](std::size_t j) {
    Rat q = probe_at(j);
    bool ok = probe.feasible(q);
    (ok ? feas : infeas).push_back(q);
    return ok;
  };

  if (!test(0)) {
    out = exact_value(lambda);
  } else {
    std::size_t lo = 0, hi = n + 1;  // probe lo feasible; probe hi (beta) infeasible
    while (hi - lo > 1) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (test(mid))
        lo = mid;
      else
        hi = mid;
    }
    if (lo == n) throw std::logic_error("sigma: feasibility changes between the last breakpoint and beta");
    out = canonical(cands[lo], polys);
  }
  std::sort(feas.begin(), feas.end());
  std::sort(infeas.begin(), infeas.end());
  out.feasible_probes = std::move(feas);
  out.infeasible_probes = std::move(infeas);
  return out;
}

// Dyadic rational with the smallest denominator in the middle half of (lo, hi).
// Chained brackets start from earlier probes, so plain midpoints would pile
// up denominators; this keeps them near 1 / (hi - lo).
Rat dyadic_probe(const Rat& lo, const Rat& hi) {
  const Rat quarter = (hi - lo) / 4;
  const Rat a = lo + quarter, b = hi - quarter;
  Int scale = 1;
  for (;;) {
    Int num;
    Rat as = a * Rat(scale);
    mpz_cdiv_q(num.get_mpz_t(), as.get_num_mpz_t(), as.get_den_mpz_t());
    Rat c(num, scale);
    c.canonicalize();
    if (c <= b) return c;
    scale *= 2;
  }
}

SigmaResult sigma_bisect(const AffineFamily& family, const Rat& lambda, PairProbe& probe, const Engine& engine) {
  const Rat& beta = family.interval().beta;
  if (probe.feasible(beta)) {
    SigmaResult out = exact_rational(beta);
    out.feasible_probes.push_back(beta);
    return out;
  }
  SigmaResult out;
  out.kind = SigmaResult::Kind::certified;
  out.eps = engine.eps;
  out.lo = lambda;
  out.hi = beta;
  out.infeasible_probes.push_back(beta);
  while (out.hi - out.lo > engine.eps) {
    Rat mid = dyadic_probe(out.lo, out.hi);
    if (probe.feasible(mid)) {
      out.lo = mid;
      out.feasible_probes.push_back(mid);
    } else {
      out.hi = mid;
      out.infeasible_probes.push_back(mid);
    }
  }
  return out;
}

}  // namespace

SigmaResult sigma(const AffineFamily& family, const RealValue& lambda, const Engine& engine) {
  const auto& iv = family.interval();
  if (compare(lambda, RealValue(iv.alpha)) < 0 || compare(lambda, RealValue(iv.beta)) > 0)
    throw InputError("sigma: lambda outside [alpha, beta]");
  if (engine.kind == Engine::Kind::bisect && sgn(engine.eps) <= 0) throw InputError("bisect engine needs eps > 0");
  RealValue lam = lambda;
  if (const auto* r = std::get_if<RealAlgebraic>(&lambda); r && r->is_rational()) lam = r->rational_value();

  PairProbe probe(family, lam);
  probe.check_member();
  if (compare(lam, RealValue(iv.beta)) == 0) return exact_rational(iv.beta);
  if (engine.kind == Engine::Kind::bisect && std::holds_alternative<Rat>(lam))
    return sigma_bisect(family, std::get<Rat>(lam), probe, engine);
  return sigma_exact(family, lam, probe, engine);
}

std::string CoverageReport::gap_string() const {
  if (covered) return "";
  return std::string(gap_lo_open ? "(" : "[") + to_string(gap_lo) + ", " + to_string(gap_hi) +
         (gap_hi_open ? ")" : "]");
}

CoverageReport verify(const AffineFamily& family, const std::vector<RatVector>& points) {
  const auto& iv = family.interval();
  CoverageReport rep;
  std::vector<RatInterval> sorted;
  for (const auto& x : points) {
    rep.intervals.push_back(dual_interval(family, x));
    if (!rep.intervals.back().is_empty()) sorted.push_back(rep.intervals.back());
  }
  std::sort(sorted.begin(), sorted.end(), [](const RatInterval& a, const RatInterval& b) { return a.lo() < b.lo(); });
  auto gap = [&](Rat lo, bool lo_open, Rat hi, bool hi_open) {
    rep.covered = false;
    rep.gap_lo = std::move(lo);
    rep.gap_hi = std::move(hi);
    rep.gap_lo_open = lo_open;
    rep.gap_hi_open = hi_open;
    return rep;
  };
  if (sorted.empty() || sorted.front().lo() > iv.alpha) {
    if (sorted.empty()) return gap(iv.alpha, false, iv.beta, false);
    return gap(iv.alpha, false, sorted.front().lo(), true);
  }
  Rat reach = sorted.front().hi();
  for (const auto& s : sorted) {
    if (s.lo() > reach) return gap(reach, true, s.lo(), true);
    if (s.hi() > reach) reach = s.hi();
  }
  if (reach < iv.beta) return gap(reach, true, iv.beta, false);
  rep.covered = true;
  return rep;
}

namespace {

// Rational witnesses for a chain of length k: each point is an LP solution of
// P(ell) and P(r) stacked, with r the chain value or a rational just below it.
void extract_witnesses(const AffineFamily& family, const std::vector<SigmaResult>& chain, const Engine& engine,
                       HittingSolution& sol) {
  const auto& iv = family.interval();
  std::vector<RealValue> lambdas{RealValue(iv.alpha)};
  for (const auto& s : chain) lambdas.push_back(s.chain_value());
  const Rat fine(Int(1), Int(1) << 64);

  Rat ell = iv.alpha;
  for (std::size_t j = 0; j < sol.k; ++j) {
    SigmaResult s;
    bool reused = false;
    for (std::size_t i = 0; i + 1 < lambdas.size(); ++i)
      if (compare(lambdas[i], RealValue(ell)) == 0) {
        s = chain[i];
        reused = true;
        break;
      }
    if (!reused) s = sigma(family, ell, engine);
    Rat r;
    if (!s.is_exact()) {
      r = s.lo;
    } else if (compare(s.exact(), RealValue(iv.beta)) >= 0) {
      r = iv.beta;
    } else if (s.kind == SigmaResult::Kind::exact_rational) {
      r = s.value;
    } else {
      r = s.algebraic.refined(fine).lo();
    }
    if (r < ell) r = ell;
    HalfspaceSystem sys = member_eval(family, {ell}).stacked(member_eval(family, {r}));
    LpOutcome res = lp_feasible(sys);
    if (res.status != LpStatus::feasible) break;
    RatInterval cover = dual_interval(family, res.point);
    sol.points.push_back(res.point);
    sol.intervals.push_back(cover);
    if (cover.hi() >= iv.beta || cover.hi() == ell) break;
    // Restart from the chain value when it is rational (so the chain's sigma
    // is reused); otherwise from a low-height rational the point still covers.
    ell = s.kind == SigmaResult::Kind::exact_algebraic ? simplest_in(r, cover.hi()) : r;
  }
  sol.coverage = verify(family, sol.points);
}

}  // namespace

HitOutcome hit_size(const AffineFamily& family, std::size_t kmax, const Engine& engine) {
  const auto& iv = family.interval();
  std::vector<SigmaResult> chain;
  RealValue cur = iv.alpha;
  for (std::size_t i = 1; i <= kmax; ++i) {
    SigmaResult s;
    try {
      s = sigma(family, cur, engine);
    } catch (const EmptyMemberError& e) {
      return NoFiniteHittingSet{e.lambda(), true, chain};
    }
    if (!s.is_exact() && compare(RealValue(s.lo), cur) == 0) s = sigma(family, cur, Engine::exact(engine.exec));
    RealValue next = s.chain_value();
    chain.push_back(s);
    if (s.is_exact() && compare(next, RealValue(iv.beta)) >= 0) {
      HittingSolution sol;
      sol.k = i;
      sol.breakpoints = chain;
      extract_witnesses(family, chain, engine, sol);
      return sol;
    }
    if (compare(next, cur) == 0) return NoFiniteHittingSet{cur, false, chain};
    cur = next;
  }
  return NoHittingSetUpTo{kmax, chain};
}

Decision decide_hit(const AffineFamily& family, std::size_t k, const Engine& engine) {
  Decision d{false, hit_size(family, k, engine)};
  d.yes = std::holds_alternative<HittingSolution>(d.outcome);
  return d;
}

}  // namespace polyhit
