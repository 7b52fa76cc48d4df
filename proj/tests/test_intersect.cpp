#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polyhit/certificates.hpp"
#include "polyhit/intersect.hpp"

using namespace polyhit;
using fixtures::q;
using fixtures::vec;

namespace {

AffineFamily triangle_family() {
  // x >= w1 + w2, x <= 1 over conv{(0,0), (1,0), (0,1)}
  AffineMatrixMap a{fixtures::mat({{"-1"}, {"1"}}), {fixtures::mat({{"0"}, {"0"}}), fixtures::mat({{"0"}, {"0"}})}};
  AffineVectorMap b{vec({"0", "1"}), {vec({"-1", "0"}), vec({"-1", "0"})}};
  return AffineFamily(a, b, ParameterDomain::vertices({{0, 0}, {1, 0}, {0, 1}}));
}

}  // namespace

TEST_CASE("stacked system of the sliding interval") {
  IntersectionSystem is = common_intersection(fixtures::f1());
  CHECK(is.generators.size() == 2);
  CHECK(is.sys.rows() == 4);
  CHECK(is.sys.b == vec({"0", "1", "-2", "3"}));
  LpOutcome r = hit_one_point(fixtures::f1());
  REQUIRE(r.status == LpStatus::infeasible);
  CHECK(verify_farkas(is.sys, r.point));
}

TEST_CASE("sliding interval on [0, 1] is hit by x = 1 only") {
  AffineFamily f = fixtures::f1("1");
  LpOutcome r = hit_one_point(f);
  REQUIRE(r.status == LpStatus::feasible);
  CHECK(r.point == RatVector{1});
  HalfspaceSystem s = common_intersection(f).sys;
  CHECK_FALSE(membership({q("99/100")}, s));
  CHECK_FALSE(membership({q("101/100")}, s));
}

TEST_CASE("triangle domain") {
  AffineFamily f = triangle_family();
  IntersectionSystem is = common_intersection(f);
  CHECK(is.sys.rows() == 6);
  LpOutcome r = hit_one_point(f);
  REQUIRE(r.status == LpStatus::feasible);
  CHECK(r.point == RatVector{1});
  // x = 1 lies in every sampled member
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; i + j <= 40; ++j) CHECK(membership({1}, member_eval(f, {Rat(i, 40), Rat(j, 40)})));
}

TEST_CASE("F2 on [0, 7/10] has a one-point hitting set") {
  AffineFamily f = fixtures::f2("7/10");
  LpOutcome r = hit_one_point(f);
  REQUIRE(r.status == LpStatus::feasible);
  for (int j = 0; j < 1000; ++j) CHECK(membership(r.point, member_eval(f, {Rat(7 * j, 10 * 999)})));
  CHECK(hit_one_point(fixtures::f2("3/4")).status == LpStatus::infeasible);
}

TEST_CASE("unrestricted domains are rejected") {
  CHECK_THROWS_AS(common_intersection(dual_family(fixtures::f1())), Unsupported);
}

TEST_CASE("endpoint equivalence on random points") {
  std::mt19937_64 rng(51);
  int inside = 0;
  for (int fam = 0; fam < 60; ++fam) {
    AffineFamily f = fixtures::random_family(rng, 4, 2, 1);
    const auto& iv = f.interval();
    HalfspaceSystem s = common_intersection(f).sys;
    for (int k = 0; k < 20; ++k) {
      RatVector x{fixtures::small_rat(rng, 2, 2), fixtures::small_rat(rng, 2, 2)};
      RatInterval di = dual_interval(f, x);
      bool covers = !di.is_empty() && di.lo() <= iv.alpha && iv.beta <= di.hi();
      CHECK(membership(x, s) == covers);
      inside += covers;
    }
  }
  CHECK(inside > 0);
}

TEST_CASE("witnesses hit every sampled member and enlarging the domain never helps") {
  std::mt19937_64 rng(53);
  for (int fam = 0; fam < 40; ++fam) {
    AffineFamily f = fixtures::random_family(rng, 4, 2, 1);
    const auto& iv = f.interval();
    LpOutcome r = hit_one_point(f);
    AffineFamily wider = restrict_domain(f, ParameterDomain::interval(iv.alpha - 1, iv.beta + Rat(1, 2)));
    if (r.status == LpStatus::infeasible) {
      CHECK(hit_one_point(wider).status == LpStatus::infeasible);
      continue;
    }
    for (int j = 0; j <= 100; ++j)
      CHECK(membership(r.point, member_eval(f, {iv.alpha + (iv.beta - iv.alpha) * Rat(j, 100)})));
  }
}
