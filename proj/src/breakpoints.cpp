#include "polyhit/breakpoints.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>

#include <omp.h>

namespace polyhit {

namespace {

// Polynomial in nu whose coefficients are polynomials in t (t stands for lambda).
struct BiPoly {
  std::vector<QPoly> c;

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    if (b.c.size() > a.c.size()) a.c.resize(b.c.size());
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] += b.c[i];
    a.trim();
    return a;
  }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) {
    if (b.c.size() > a.c.size()) a.c.resize(b.c.size());
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
    a.trim();
    return a;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c.resize(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
  }
};

// Cofactor expansion; r <= 4 here so this is cheaper than elimination over a ring.
template <class T>
T det(const std::vector<std::vector<const T*>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return *m[0][0];
  if (n == 2) return (*m[0][0]) * (*m[1][1]) - (*m[0][1]) * (*m[1][0]);
  T acc{};
  std::vector<std::vector<const T*>> sub(n - 1, std::vector<const T*>(n - 1));
  for (std::size_t k = 0; k < n; ++k) {
    if (m[0][k]->is_zero()) continue;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != k) sub[i - 1][jj++] = m[i][j];
    T term = (*m[0][k]) * det(sub);
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

void combinations(std::size_t n, std::size_t r, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return;
  for (;;) {
    out.push_back(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Plan {
  std::vector<std::vector<std::size_t>> row_sets;              // indices into the 2m stacked rows
  std::vector<std::vector<std::vector<std::size_t>>> col_sets;  // by subset size
};

Plan make_plan(std::size_t m, std::size_t d) {
  Plan plan;
  plan.col_sets.resize(d + 2);
  for (std::size_t r = 1; r <= d + 1; ++r) {
    combinations(d + 1, r, plan.col_sets[r]);
    std::vector<std::vector<std::size_t>> rows;
    combinations(2 * m, r, rows);
    for (auto& s : rows)
      if (s.back() >= m) plan.row_sets.push_back(std::move(s));  // at least one nu-row
  }
  return plan;
}

// Entry (row, col) of the augmented matrix [A | b] restricted to row `r` of the
// original family: constant part and slope in the parameter.
std::pair<Rat, Rat> entry(const AffineFamily& f, std::size_t r, std::size_t col) {
  if (col < f.d()) return {f.a().base(r, col), f.a().slopes[0](r, col)};
  return {f.b().base[r], f.b().slopes[0][r]};
}

template <class Body>
void run_tasks(std::size_t n, Exec exec, std::vector<std::set<IntPoly>>& buckets, Body body) {
  if (exec == Exec::serial) {
    buckets.assign(1, {});
    for (std::size_t i = 0; i < n; ++i) body(i, buckets[0]);
    return;
  }
  buckets.assign(static_cast<std::size_t>(omp_get_max_threads()), {});
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i, buckets[static_cast<std::size_t>(omp_get_thread_num())]);
    } catch (...) {
#pragma omp critical(polyhit_breakpoints_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

std::vector<IntPoly> merge(std::vector<std::set<IntPoly>>& buckets) {
  std::set<IntPoly> all;
  for (auto& b : buckets) all.merge(b);
  return {all.begin(), all.end()};
}

void keep(const QPoly& q, std::set<IntPoly>& out) {
  if (q.degree() <= 0) return;
  IntPoly p = IntPoly::primitive_of(q).squarefree();
  if (p.degree() > 0) out.insert(std::move(p));
}

Rat det_rational(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      result = -result;
    }
    result *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return result;
}

// Newton interpolation through (x_i, y_i), returned in monomial form.
QPoly interpolate(const std::vector<Rat>& xs, std::vector<Rat> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
  QPoly out = QPoly::constant(ys[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) out = out * QPoly::linear(-xs[i], 1) + QPoly::constant(ys[i]);
  return out;
}

// Norm of D(lambda, nu) from Q(lambda) down to Q, as a polynomial in nu.
// `modulus` is the defining polynomial of lambda; returns zero if D(lambda, .) == 0.
QPoly norm_of(const BiPoly& dpoly, const QPoly& modulus, const RealAlgebraic& lambda) {
  QPoly g = modulus;
  for (const auto& ck : dpoly.c) g = gcd(g, ck);
  if (g.degree() > 0 && sign_at_root(g, lambda) == 0) return {};
  QPoly p = g.degree() > 0 ? divmod(modulus, g).first.monic() : modulus;

  std::vector<QPoly> coeffs;
  bool t_free = true;
  for (const auto& ck : dpoly.c) {
    coeffs.push_back(rem(ck, p));
    if (coeffs.back().degree() > 0) t_free = false;
  }
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.size() < 2) return {};
  if (t_free) {
    std::vector<Rat> c;
    for (const auto& ck : coeffs) c.push_back(ck.coeff(0));
    return QPoly(std::move(c));
  }

  const std::size_t n = static_cast<std::size_t>(p.degree());
  const std::size_t e = coeffs.size() - 1;
  const std::size_t samples = n * e + 1;
  std::vector<Rat> xs(samples), ys(samples);
  const QPoly t = QPoly::linear(0, 1);
  for (std::size_t j = 0; j < samples; ++j) {
    xs[j] = Rat(static_cast<long>(j));
    QPoly at;
    Rat pw = 1;
    for (const auto& ck : coeffs) {
      at += ck * pw;
      pw *= xs[j];
    }
    std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(n));
    QPoly cur = rem(at, p);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) mat[i][k] = cur.coeff(i);
      cur = rem(cur * t, p);
    }
    ys[j] = det_rational(std::move(mat));
  }
  return interpolate(xs, ys);
}

}  // namespace

std::vector<IntPoly> minor_polynomials(const AffineFamily& family, const Rat& lambda, Exec exec) {
  family.interval();
  const std::size_t m = family.m(), d = family.d();
  Plan plan = make_plan(m, d);

  // stacked rows: [0, m) at lambda (constants), [m, 2m) linear in nu
  std::vector<std::vector<QPoly>> rows(2 * m, std::vector<QPoly>(d + 1));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c <= d; ++c) {
      auto [a0, a1] = entry(family, r, c);
      rows[r][c] = QPoly::constant(a0 + lambda * a1);
      rows[m + r][c] = QPoly::linear(a0, a1);
    }

  std::vector<std::set<IntPoly>> buckets;
  run_tasks(plan.row_sets.size(), exec, buckets, [&](std::size_t i, std::set<IntPoly>& out) {
    const auto& rs = plan.row_sets[i];
    const std::size_t r = rs.size();
    std::vector<std::vector<const QPoly*>> mat(r, std::vector<const QPoly*>(r));
    for (const auto& cs : plan.col_sets[r]) {
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) mat[a][b] = &rows[rs[a]][cs[b]];
      keep(det(mat), out);
    }
  });
  return merge(buckets);
}

std::vector<IntPoly> minor_polynomials(const AffineFamily& family, const RealAlgebraic& lambda, Exec exec) {
  if (lambda.is_rational()) return minor_polynomials(family, lambda.rational_value(), exec);
  family.interval();
  const std::size_t m = family.m(), d = family.d();
  Plan plan = make_plan(m, d);
  const QPoly modulus = lambda.poly().to_q().monic();

  std::vector<std::vector<BiPoly>> rows(2 * m, std::vector<BiPoly>(d + 1));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c <= d; ++c) {
      auto [a0, a1] = entry(family, r, c);
      rows[r][c].c = {QPoly::linear(a0, a1)};
      rows[r][c].trim();
      rows[m + r][c].c = {QPoly::constant(a0), QPoly::constant(a1)};
      rows[m + r][c].trim();
    }

  std::vector<std::set<IntPoly>> buckets;
  run_tasks(plan.row_sets.size(), exec, buckets, [&](std::size_t i, std::set<IntPoly>& out) {
    const auto& rs = plan.row_sets[i];
    const std::size_t r = rs.size();
    std::vector<std::vector<const BiPoly*>> mat(r, std::vector<const BiPoly*>(r));
    for (const auto& cs : plan.col_sets[r]) {
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) mat[a][b] = &rows[rs[a]][cs[b]];
      BiPoly minor = det(mat);
      if (minor.c.size() < 2) continue;  // constant in nu: no root to contribute
      keep(norm_of(minor, modulus, lambda), out);
    }
  });
  return merge(buckets);
}

std::vector<Candidate> roots_between(const std::vector<IntPoly>& polys, const RealValue& lo, const Rat& hi,
                                     Exec exec) {
  std::vector<std::vector<Candidate>> per(polys.size());
  auto body = [&](std::size_t i) {
    for (auto& root : isolate_roots(polys[i])) {
      if (compare(root, hi) >= 0) continue;
      if (compare(RealValue(root), lo) <= 0) continue;
      per[i].push_back(Candidate{std::move(root), {i}});
    }
  };
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < polys.size(); ++i) body(i);
  } else {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < polys.size(); ++i) {
      try {
        body(i);
      } catch (...) {
#pragma omp critical(polyhit_roots_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  std::vector<Candidate> all;
  for (auto& v : per)
    for (auto& c : v) all.push_back(std::move(c));
  std::sort(all.begin(), all.end(),
            [](const Candidate& a, const Candidate& b) { return compare(a.value, b.value) < 0; });
  std::vector<Candidate> out;
  for (auto& c : all) {
    if (!out.empty() && compare(out.back().value, c.value) == 0) {
      out.back().sources.push_back(c.sources.front());
      continue;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace polyhit
