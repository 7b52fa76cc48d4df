#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polyhit/certificates.hpp"
#include "polyhit/lp.hpp"

using namespace polyhit;
using fixtures::mat;
using fixtures::vec;

namespace {

HalfspaceSystem sys1(std::initializer_list<const char*> a, std::initializer_list<const char*> b) {
  std::vector<RatVector> rows;
  for (const char* s : a) rows.push_back({fixtures::q(s)});
  return HalfspaceSystem{RatMatrix::from_rows(rows, 1), vec(b)};
}

}  // namespace

TEST_CASE("one-dimensional contradiction") {
  HalfspaceSystem s = sys1({"-1", "1"}, {"0", "-1"});
  LpOutcome r = lp_feasible(s);
  REQUIRE(r.status == LpStatus::infeasible);
  CHECK(verify_farkas(s, r.point));
  CHECK(r.point[0] == r.point[1]);
}

TEST_CASE("feasible unit interval") {
  HalfspaceSystem s = sys1({"-1", "1"}, {"0", "1"});
  LpOutcome r = lp_feasible(s);
  REQUIRE(r.status == LpStatus::feasible);
  CHECK(r.point[0] >= 0);
  CHECK(r.point[0] <= 1);
}

TEST_CASE("degenerate systems") {
  HalfspaceSystem empty{RatMatrix(0, 2), {}};
  LpOutcome r = lp_feasible(empty);
  REQUIRE(r.status == LpStatus::feasible);
  CHECK(r.point == RatVector{0, 0});

  HalfspaceSystem zero_dim{RatMatrix(2, 0), vec({"1", "0"})};
  CHECK(lp_feasible(zero_dim).status == LpStatus::feasible);
  HalfspaceSystem zero_dim_bad{RatMatrix(2, 0), vec({"1", "-1"})};
  LpOutcome bad = lp_feasible(zero_dim_bad);
  REQUIRE(bad.status == LpStatus::infeasible);
  CHECK(verify_farkas(zero_dim_bad, bad.point));

  HalfspaceSystem zero_row{mat({{"0", "0"}, {"1", "0"}}), vec({"-1", "3"})};
  LpOutcome z = lp_feasible(zero_row);
  REQUIRE(z.status == LpStatus::infeasible);
  CHECK(z.point == RatVector{1, 0});
}

TEST_CASE("F2 is nonempty on [0, 1]") {
  auto f2 = fixtures::f2();
  for (int j = 0; j <= 49; ++j) {
    Rat w(j, 49);
    LpOutcome r = lp_feasible(member_eval(f2, {w}));
    CHECK(r.status == LpStatus::feasible);
    Rat x2 = Rat(1, 2) - w;
    if (x2 < 0) x2 = 0;
    CHECK(membership({w, x2}, member_eval(f2, {w})));
  }
}

TEST_CASE("optimize examples") {
  LpOutcome r = lp_optimize({1}, sys1({"1"}, {"3"}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 3);

  HalfspaceSystem half = sys1({"-1"}, {"0"});
  LpOutcome u = lp_optimize({1}, half);
  REQUIRE(u.status == LpStatus::unbounded);
  CHECK(verify_ray(half, {1}, u.point));
  CHECK(u.point[0] > 0);

  LpOutcome f2max = lp_optimize({1, 0}, member_eval(fixtures::f2(), {0}));
  REQUIRE(f2max.status == LpStatus::optimal);
  CHECK(f2max.value == 2);

  LpOutcome inf = lp_optimize({1}, sys1({"-1", "1"}, {"0", "-1"}));
  REQUIRE(inf.status == LpStatus::infeasible);
  CHECK(verify_farkas(sys1({"-1", "1"}, {"0", "-1"}), inf.point));
  CHECK_THROWS_AS(lp_optimize({1, 1}, sys1({"1"}, {"3"})), InputError);
}

TEST_CASE("check_bounded examples") {
  CHECK(check_bounded(sys1({"-1", "1"}, {"0", "1"})));
  CHECK_FALSE(check_bounded(sys1({"-1"}, {"0"})));
  CHECK_FALSE(check_bounded(member_eval(fixtures::f3(), {0})));
  CHECK(check_bounded(member_eval(fixtures::f2(), {Rat(1, 3)})));
}

TEST_CASE("feasible agrees with optimize(0)") {
  std::mt19937_64 rng(21);
  int infeasible = 0;
  for (int k = 0; k < 200; ++k) {
    std::size_t d = 1 + k % 3;
    AffineFamily f = fixtures::random_family(rng, 2 + k % 5, d, 1);
    HalfspaceSystem s = member_eval(f, {fixtures::small_rat(rng)});
    for (auto& v : s.b) v -= 3;  // make infeasibility common
    LpOutcome a = lp_feasible(s);
    LpOutcome b = lp_optimize(RatVector(d), s);
    CHECK((a.status == LpStatus::feasible) == (b.status != LpStatus::infeasible));
    if (a.status == LpStatus::feasible) CHECK(verify_witness(s, a.point));
    else {
      CHECK(verify_farkas(s, a.point));
      ++infeasible;
    }
  }
  CHECK(infeasible > 10);
}

TEST_CASE("box optimum is analytic") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 50; ++k) {
    const std::size_t d = 1 + k % 4;
    RatMatrix a(2 * d, d);
    RatVector b(2 * d), c(d);
    Rat expect = 0;
    for (std::size_t j = 0; j < d; ++j) {
      Rat lo = fixtures::small_rat(rng), hi = lo + fixtures::small_rat(rng, 4, 1) * fixtures::small_rat(rng, 4, 1);
      if (hi < lo) std::swap(lo, hi);
      a(2 * j, j) = 1;
      b[2 * j] = hi;
      a(2 * j + 1, j) = -1;
      b[2 * j + 1] = -lo;
      c[j] = fixtures::small_rat(rng);
      expect += c[j] * (sgn(c[j]) >= 0 ? hi : lo);
    }
    HalfspaceSystem s{a, b};
    LpOutcome r = lp_optimize(c, s);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == expect);
    CHECK(verify_witness(s, r.point));
  }
}

TEST_CASE("redundant and parallel rows") {
  HalfspaceSystem s{mat({{"1", "1"}, {"1", "1"}, {"2", "2"}, {"-1", "0"}, {"0", "-1"}}), vec({"1", "1", "2", "0", "0"})};
  LpOutcome r = lp_optimize(vec({"1", "1"}), s);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 1);
  CHECK(check_bounded(s));
}

TEST_CASE("results are deterministic") {
  HalfspaceSystem s = member_eval(fixtures::f2(), {Rat(1, 3)});
  LpOutcome a = lp_optimize(vec({"1", "1"}), s), b = lp_optimize(vec({"1", "1"}), s);
  CHECK(a.point == b.point);
}

TEST_CASE("verifier rejects bad certificates") {
  HalfspaceSystem s = sys1({"-1", "1"}, {"0", "-1"});
  CHECK_FALSE(verify_farkas(s, {1, 0}));
  CHECK_FALSE(verify_farkas(s, {-1, -1}));
  CHECK_FALSE(verify_farkas(s, {1}));
  CHECK_FALSE(verify_witness(s, {0}));
  CHECK_FALSE(verify_ray(sys1({"-1"}, {"0"}), {1}, {-1}));
}
