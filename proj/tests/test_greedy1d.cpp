#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polyhit/greedy1d.hpp"
#include "polyhit/lp.hpp"
#include "polyhit/oracle.hpp"

using namespace polyhit;
using fixtures::q;
using fixtures::vec;

namespace {

IntPoly P(std::initializer_list<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return IntPoly(v);
}

RealAlgebraic inv_sqrt2() { return isolate_roots(P({-1, 0, 2}))[1]; }

bool pair_feasible(const AffineFamily& f, const Rat& a, const Rat& b) {
  return lp_feasible(member_eval(f, {a}).stacked(member_eval(f, {b}))).status == LpStatus::feasible;
}

std::size_t solution_k(const HitOutcome& o) { return std::get<HittingSolution>(o).k; }

}  // namespace

TEST_CASE("sigma on the sliding interval") {
  SigmaResult s = sigma(fixtures::f1(), Rat(0), Engine::exact());
  REQUIRE(s.kind == SigmaResult::Kind::exact_rational);
  CHECK(s.value == 1);
  CHECK(sigma(fixtures::f1(), Rat(1), Engine::exact()).value == 2);
  CHECK(sigma(fixtures::f1(), Rat(2), Engine::exact()).value == 2);
  CHECK_THROWS_AS(sigma(fixtures::f1(), Rat(3), Engine::exact()), InputError);
}

TEST_CASE("sigma on F2 from 0 is 1/sqrt2") {
  SigmaResult s = sigma(fixtures::f2(), Rat(0), Engine::exact());
  REQUIRE(s.kind == SigmaResult::Kind::exact_algebraic);
  CHECK(s.algebraic.poly() == P({-1, 0, 2}));
  CHECK(s.algebraic.lo() == Rat(11, 16));
  CHECK(s.algebraic.hi() == Rat(3, 4));
  CHECK(compare(s.algebraic, inv_sqrt2()) == 0);
  CHECK(s.algebraic.approx(8) == "0.70710678");
  for (const Rat& f : s.feasible_probes) CHECK(2 * f * f < 1);
  for (const Rat& f : s.infeasible_probes) CHECK(2 * f * f > 1);
}

TEST_CASE("sigma on F2 from irrational and rational starts") {
  SigmaResult s = sigma(fixtures::f2(), inv_sqrt2(), Engine::exact());
  REQUIRE(s.kind == SigmaResult::Kind::exact_rational);
  CHECK(s.value == 1);
  CHECK(sigma(fixtures::f2(), Rat(7, 10), Engine::exact()).value == 1);
  // sigma(l) = sqrt(1/2 + l) below l = 1/2
  SigmaResult t = sigma(fixtures::f2("2"), Rat(1, 4), Engine::exact());
  REQUIRE(t.kind == SigmaResult::Kind::exact_algebraic);
  CHECK(sign_at_root(P({-3, 0, 4}), t.algebraic) == 0);  // nu^2 = 3/4
}

TEST_CASE("sigma errors") {
  try {
    sigma(fixtures::f3(), Rat(1), Engine::exact());
    FAIL("expected EmptyMemberError");
  } catch (const EmptyMemberError& e) {
    CHECK(std::get<Rat>(e.lambda()) == 1);
  }
  CHECK_THROWS_AS(sigma(fixtures::f3(), Rat(0), Engine::exact()), NotPolytopeError);
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(sigma(fixtures::random_family(rng, 2, 1, 2), Rat(0), Engine::exact()), Unsupported);
}

TEST_CASE("bisect engine brackets") {
  Rat eps(1, 1000000000);
  SigmaResult s = sigma(fixtures::f2(), Rat(0), Engine::bisect(eps));
  REQUIRE(s.kind == SigmaResult::Kind::certified);
  CHECK(s.hi - s.lo <= eps);
  CHECK(compare(RealValue(s.lo), RealValue(inv_sqrt2())) <= 0);
  CHECK(compare(RealValue(s.hi), RealValue(inv_sqrt2())) >= 0);
  CHECK(pair_feasible(fixtures::f2(), 0, s.lo));
  CHECK_FALSE(pair_feasible(fixtures::f2(), 0, s.hi));
  CHECK(sigma(fixtures::f1(), Rat(0), Engine::bisect()).hi - sigma(fixtures::f1(), Rat(0), Engine::bisect()).lo <=
        Engine::default_eps());
  CHECK(sigma(fixtures::f2(), Rat(7, 10), Engine::bisect()).kind == SigmaResult::Kind::exact_rational);
  // irrational lambda goes through the exact engine
  CHECK(sigma(fixtures::f2(), inv_sqrt2(), Engine::bisect()).value == 1);
  CHECK_THROWS_AS(sigma(fixtures::f2(), Rat(0), Engine::bisect(0)), InputError);
}

TEST_CASE("default engine choice") {
  CHECK(Engine::default_for(32).kind == Engine::Kind::exact);
  CHECK(Engine::default_for(33).kind == Engine::Kind::bisect);
  CHECK(Engine::default_eps() == Rat(Int(1), Int(1) << 40));
}

TEST_CASE("hit_size examples") {
  HitOutcome o = hit_size(fixtures::f1(), 5, Engine::exact());
  auto& sol = std::get<HittingSolution>(o);
  CHECK(sol.k == 2);
  REQUIRE(sol.points.size() == 2);
  CHECK(sol.intervals[0] == RatInterval::closed(0, 1));
  CHECK(sol.intervals[1] == RatInterval::closed(1, 2));
  CHECK(sol.coverage.covered);
  CHECK(sol.breakpoints[0].value == 1);
  CHECK(sol.breakpoints[1].value == 2);

  HitOutcome o2 = hit_size(fixtures::f2(), 5, Engine::exact());
  auto& sol2 = std::get<HittingSolution>(o2);
  CHECK(sol2.k == 2);
  CHECK(compare(sol2.breakpoints[0].algebraic, inv_sqrt2()) == 0);
  CHECK(sol2.breakpoints[1].value == 1);
  CHECK(sol2.coverage.covered);

  HitOutcome o3 = hit_size(fixtures::f1("1"), 5, Engine::exact());
  CHECK(std::get<HittingSolution>(o3).points == std::vector<RatVector>{{1}});
}

TEST_CASE("hit_size failures") {
  CHECK_THROWS_AS(hit_size(fixtures::f3(), 5, Engine::exact()), NotPolytopeError);
  HitOutcome o = hit_size(fixtures::f3_boxed(), 5, Engine::exact());
  REQUIRE(std::holds_alternative<NoFiniteHittingSet>(o));
  CHECK(compare(std::get<NoFiniteHittingSet>(o).stall, RealValue(Rat(9, 10))) == 0);
  HitOutcome up = hit_size(fixtures::f1("5"), 2, Engine::exact());
  REQUIRE(std::holds_alternative<NoHittingSetUpTo>(up));
  CHECK(std::get<NoHittingSetUpTo>(up).chain.size() == 2);

  // member empty at the start
  auto empty_start = fixtures::one_param(fixtures::mat({{"1"}, {"-1"}}), fixtures::mat({{"0"}, {"0"}}), vec({"-1", "0"}),
                                         vec({"1", "0"}), 0, 2);
  HitOutcome e = hit_size(empty_start, 5, Engine::exact());
  REQUIRE(std::holds_alternative<NoFiniteHittingSet>(e));
  CHECK(std::get<NoFiniteHittingSet>(e).empty_member);
}

TEST_CASE("decide_hit examples") {
  CHECK_FALSE(decide_hit(fixtures::f1(), 1, Engine::exact()).yes);
  CHECK(decide_hit(fixtures::f1(), 2, Engine::exact()).yes);
  CHECK(decide_hit(fixtures::f2(), 2, Engine::exact()).yes);
  CHECK_FALSE(decide_hit(fixtures::f2(), 1, Engine::exact()).yes);
  CHECK(decide_hit(fixtures::f2(), 2, Engine::bisect()).yes);
}

TEST_CASE("verify examples") {
  CHECK(verify(fixtures::f1(), {{1}, {2}}).covered);
  CoverageReport gap = verify(fixtures::f1(), {{1}});
  CHECK_FALSE(gap.covered);
  CHECK(gap.gap_string() == "(1, 2]");
  CoverageReport f2 = verify(fixtures::f2(), {vec({"7/10", "1/2"}), vec({"1", "0"})});
  CHECK(f2.covered);
  CHECK(f2.intervals[0] == RatInterval::closed(0, q("7/10")));
  CHECK(f2.intervals[1] == RatInterval::closed(q("1/2"), 1));
  CoverageReport none = verify(fixtures::f1(), {{5}});
  CHECK(none.gap_string() == "[0, 2]");
  CoverageReport front = verify(fixtures::f1(), {{2}});
  CHECK(front.gap_string() == "[0, 1)");
  CoverageReport mid = verify(fixtures::f1("3"), {{1}, {4}});
  CHECK(mid.gap_string() == "(1, 3)");
}

TEST_CASE("sigma is monotone and both engines agree") {
  std::mt19937_64 rng(61);
  int checked = 0;
  for (int fam = 0; fam < 25; ++fam) {
    AffineFamily f = fam % 2 ? fixtures::moving_polytope(rng, 2, 3) : fixtures::random_polytope_family(rng, 1 + fam % 2, 3);
    std::vector<Rat> lams{0, Rat(1, 5), Rat(1, 2), Rat(3, 4), 1};
    std::vector<SigmaResult> out;
    try {
      for (const Rat& l : lams) out.push_back(sigma(f, l, Engine::exact()));
    } catch (const EmptyMemberError&) {
      continue;
    }
    for (std::size_t i = 0; i + 1 < out.size(); ++i) CHECK(compare(out[i].exact(), out[i + 1].exact()) <= 0);
    for (std::size_t i = 0; i < lams.size(); ++i) {
      SigmaResult b = sigma(f, lams[i], Engine::bisect(Rat(1, 1 << 20)));
      RealValue e = out[i].exact();
      if (b.is_exact()) {
        CHECK(compare(b.exact(), e) == 0);
        continue;
      }
      CHECK(compare(RealValue(b.lo), e) <= 0);
      CHECK(compare(RealValue(b.hi), e) >= 0);
      // probes on either side of sigma
      for (const Rat& p : out[i].feasible_probes) CHECK(compare(RealValue(p), e) <= 0);
      for (const Rat& p : out[i].infeasible_probes) CHECK(compare(RealValue(p), e) > 0);
      for (int j = 0; j <= 8; ++j) {
        Rat probe = lams[i] + (1 - lams[i]) * Rat(j, 8);
        CHECK(pair_feasible(f, lams[i], probe) == (compare(RealValue(probe), e) <= 0));
      }
      ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("greedy solutions verify and match the interval oracle in one dimension") {
  std::mt19937_64 rng(67);
  int solved = 0;
  for (int fam = 0; fam < 60; ++fam) {
    AffineFamily f = fixtures::random_interval_family(rng);
    HitOutcome o = hit_size(f, 50, Engine::exact());
    if (!std::holds_alternative<HittingSolution>(o)) continue;
    const auto& sol = std::get<HittingSolution>(o);
    CHECK(sol.coverage.covered);
    CHECK(verify(f, sol.points).covered);
    CHECK(sol.points.size() == sol.k);
    std::size_t grid = grid_hit_size(f, GridSpec{101});
    CHECK(grid <= sol.k);
    ++solved;
  }
  CHECK(solved > 20);
}

TEST_CASE("decide_hit agrees with the chain length") {
  std::mt19937_64 rng(71);
  for (int fam = 0; fam < 30; ++fam) {
    AffineFamily f = fixtures::random_interval_family(rng);
    HitOutcome o = hit_size(f, 50, Engine::exact());
    if (!std::holds_alternative<HittingSolution>(o)) {
      CHECK_FALSE(decide_hit(f, 3, Engine::exact()).yes);
      continue;
    }
    std::size_t k = solution_k(o);
    CHECK(decide_hit(f, k, Engine::exact()).yes);
    if (k > 1) CHECK_FALSE(decide_hit(f, k - 1, Engine::exact()).yes);
  }
}

TEST_CASE("bisect engine never undercounts") {
  std::mt19937_64 rng(73);
  for (int fam = 0; fam < 10; ++fam) {
    AffineFamily f = fixtures::moving_polytope(rng, 2, 4);
    std::size_t exact = solution_k(hit_size(f, 50, Engine::exact()));
    HitOutcome b = hit_size(f, 50, Engine::bisect());
    REQUIRE(std::holds_alternative<HittingSolution>(b));
    CHECK(solution_k(b) >= exact);
    CHECK(std::get<HittingSolution>(b).coverage.covered);
  }
}
