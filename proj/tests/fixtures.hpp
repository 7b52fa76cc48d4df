#pragma once

// Named families shared by the unit tests, the acceptance run and the benchmark.

#include <random>
#include <string>
#include <vector>

#include "polyhit/adaptability.hpp"
#include "polyhit/family.hpp"

namespace fixtures {

using polyhit::AffineFamily;
using polyhit::AffineMatrixMap;
using polyhit::AffineVectorMap;
using polyhit::ParameterDomain;
using polyhit::Rat;
using polyhit::RatMatrix;
using polyhit::RatVector;

inline Rat q(const char* s) { return polyhit::parse_rat(s); }

inline RatVector vec(std::initializer_list<const char*> xs) {
  RatVector v;
  for (const char* s : xs) v.push_back(q(s));
  return v;
}

inline RatMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<RatVector> rs;
  for (auto r : rows) rs.push_back(vec(r));
  return RatMatrix::from_rows(rs, rs.empty() ? 0 : rs.front().size());
}

/// One-parameter family A0 + w A1, b0 + w b1 over [alpha, beta].
inline AffineFamily one_param(RatMatrix a0, RatMatrix a1, RatVector b0, RatVector b1, Rat alpha, Rat beta) {
  return AffineFamily(AffineMatrixMap{std::move(a0), {std::move(a1)}}, AffineVectorMap{std::move(b0), {std::move(b1)}},
                      ParameterDomain::interval(std::move(alpha), std::move(beta)));
}

/// Sliding unit interval [w, w + 1].
inline AffineFamily f1(const char* beta = "2") {
  return one_param(mat({{"-1"}, {"1"}}), mat({{"0"}, {"0"}}), vec({"0", "1"}), vec({"-1", "1"}), 0, q(beta));
}

/// x1 >= w, w x1 + x2 <= 1, x2 >= 1/2 - w, x1 <= 2, x2 <= 2 on [0, 1].
inline AffineFamily f2(const char* beta = "1") {
  return one_param(mat({{"-1", "0"}, {"0", "1"}, {"0", "-1"}, {"1", "0"}, {"0", "1"}}),
                   mat({{"0", "0"}, {"1", "0"}, {"0", "0"}, {"0", "0"}, {"0", "0"}}),
                   vec({"0", "1", "-1/2", "2", "2"}), vec({"-1", "0", "1", "0", "0"}), 0, q(beta));
}

/// (1 - w) x <= -1 on [0, 2]: half-lines, empty at w = 1.
inline AffineFamily f3() { return one_param(mat({{"1"}}), mat({{"-1"}}), vec({"-1"}), vec({"0"}), 0, 2); }

/// f3 with |x| <= 10 added.
inline AffineFamily f3_boxed() {
  return one_param(mat({{"1"}, {"-1"}, {"1"}}), mat({{"-1"}, {"0"}, {"0"}}), vec({"-1", "10", "10"}),
                   vec({"0", "0", "0"}), 0, 2);
}

inline Rat small_rat(std::mt19937_64& rng, int num_range = 4, int den_max = 3) {
  std::uniform_int_distribution<int> num(-num_range, num_range), den(1, den_max);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// Random d-dimensional one-parameter family over [0, 1]: the box |x_j| <= 3
/// cut by `extra` random affine rows. Members are bounded; emptiness is possible.
inline AffineFamily random_polytope_family(std::mt19937_64& rng, std::size_t d, std::size_t extra) {
  const std::size_t m = 2 * d + extra;
  RatMatrix a0(m, d), a1(m, d);
  RatVector b0(m), b1(m);
  for (std::size_t j = 0; j < d; ++j) {
    a0(2 * j, j) = 1;
    a0(2 * j + 1, j) = -1;
    b0[2 * j] = 3;
    b0[2 * j + 1] = 3;
  }
  for (std::size_t r = 2 * d; r < m; ++r) {
    for (std::size_t j = 0; j < d; ++j) {
      a0(r, j) = small_rat(rng);
      a1(r, j) = small_rat(rng, 2, 2);
    }
    b0[r] = small_rat(rng) + 2;
    b1[r] = small_rat(rng);
  }
  return one_param(std::move(a0), std::move(a1), std::move(b0), std::move(b1), 0, 1);
}

/// Polytope around the center (6w, 0, ..., 0) that drifts across [0, 1]: the
/// box |x_j| <= 10 plus `extra` random rows a.x <= a.c(w) + r with r >= 1 and
/// small w-slopes in A. Every member contains c(w), so none is empty.
inline AffineFamily moving_polytope(std::mt19937_64& rng, std::size_t d, std::size_t extra) {
  const std::size_t m = 2 * d + extra;
  RatMatrix a0(m, d), a1(m, d);
  RatVector b0(m), b1(m);
  for (std::size_t j = 0; j < d; ++j) {
    a0(2 * j, j) = 1;
    a0(2 * j + 1, j) = -1;
    b0[2 * j] = 10;
    b0[2 * j + 1] = 10;
  }
  std::uniform_int_distribution<int> slope(-1, 1), radius(4, 8);
  for (std::size_t r = 2 * d; r < m; ++r) {
    for (std::size_t j = 0; j < d; ++j) {
      a0(r, j) = small_rat(rng, 3, 2);
      a1(r, j) = Rat(slope(rng), 10 * static_cast<long>(d));
    }
    b0[r] = Rat(radius(rng), 4);
    b1[r] = 6 * a0(r, 0);
  }
  return one_param(std::move(a0), std::move(a1), std::move(b0), std::move(b1), 0, 1);
}

/// Intervals l(w) <= x <= u(w) cut by (1 + w/2) x <= c(w), over [0, 1].
/// Members can be empty; callers filter.
inline AffineFamily random_interval_family(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> lo(-8, 0), width(1, 8), drift(-12, 12), cut(0, 16);
  const Rat l0(lo(rng), 4), l1(drift(rng), 4);
  const Rat u0 = l0 + Rat(width(rng), 4), u1 = l1 + Rat(drift(rng), 8);
  const Rat c0(cut(rng), 4), c1(drift(rng), 4);
  return one_param(mat({{"-1"}, {"1"}, {"1"}}), mat({{"0"}, {"0"}, {"1/2"}}), RatVector{-l0, u0, c0},
                   RatVector{-l1, u1, c1}, 0, 1);
}

/// Arbitrary family with m rows, dimension d and p parameters; random vertex
/// domain for p >= 2. Right-hand sides are shifted up so membership is common.
inline AffineFamily random_family(std::mt19937_64& rng, std::size_t m, std::size_t d, std::size_t p) {
  AffineMatrixMap a{RatMatrix(m, d), std::vector<RatMatrix>(p, RatMatrix(m, d))};
  AffineVectorMap b{RatVector(m), std::vector<RatVector>(p, RatVector(m))};
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      a.base(r, c) = small_rat(rng);
      for (auto& s : a.slopes) s(r, c) = small_rat(rng, 2, 2);
    }
    b.base[r] = small_rat(rng) + 3;
    for (auto& s : b.slopes) s[r] = small_rat(rng, 2, 2);
  }
  if (p == 1) {
    Rat x = small_rat(rng), y = small_rat(rng);
    if (x > y) std::swap(x, y);
    return AffineFamily(std::move(a), std::move(b), ParameterDomain::interval(x, y));
  }
  std::vector<RatVector> vs(p + 1, RatVector(p));
  for (auto& v : vs)
    for (auto& e : v) e = small_rat(rng);
  return AffineFamily(std::move(a), std::move(b), ParameterDomain::vertices(std::move(vs)));
}

/// Random AdaptInstance with first stage: m rows, ell first-stage and d_s
/// second-stage variables, one parameter on [0, 1].
inline polyhit::AdaptInstance random_lift_instance(std::mt19937_64& rng, std::size_t m, std::size_t ell,
                                                   std::size_t ds) {
  polyhit::AdaptInstance inst;
  auto rmat = [&](std::size_t r, std::size_t c) {
    RatMatrix x(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) x(i, j) = small_rat(rng);
    return x;
  };
  auto rvec = [&](std::size_t n) {
    RatVector v(n);
    for (auto& e : v) e = small_rat(rng);
    return v;
  };
  inst.a_s = AffineMatrixMap{rmat(m, ds), {rmat(m, ds)}};
  inst.b = AffineVectorMap{rvec(m), {rvec(m)}};
  inst.c_s = AffineVectorMap{rvec(ds), {rvec(ds)}};
  inst.omega = ParameterDomain::interval(0, 1);
  inst.first = polyhit::FirstStage{ell, AffineMatrixMap{rmat(m, ell), {rmat(m, ell)}}, rvec(ell)};
  return inst;
}

/// Interval k-center on [0, 1]: x = (y, s), |y - w| <= s, objective s.
inline polyhit::AdaptInstance f4() {
  polyhit::AdaptInstance inst;
  inst.a_s = AffineMatrixMap{mat({{"1", "-1"}, {"-1", "-1"}}), {mat({{"0", "0"}, {"0", "0"}})}};
  inst.b = AffineVectorMap{vec({"0", "0"}), {vec({"1", "-1"})}};
  inst.c_s = AffineVectorMap{vec({"0", "1"}), {vec({"0", "0"})}};
  inst.omega = ParameterDomain::interval(0, 1);
  return inst;
}

}  // namespace fixtures
