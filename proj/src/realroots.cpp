#include "polyhit/realroots.hpp"

#include <utility>

namespace polyhit {

namespace {

std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Rational root inside (lo, hi] of the single root there, if any. Any rational
// root k/a_n has a_n * root an integer, so once the interval is narrower than
// 1/|a_n| only one candidate remains.
bool find_rational_root(const IntPoly& p, Rat lo, Rat hi, Rat& out) {
  if (p.sign_at(hi) == 0) {
    out = hi;
    return true;
  }
  const Int lead_abs = abs(p.lead());
  const Rat limit(Int(1), lead_abs);
  const int s_hi = p.sign_at(hi);
  while (hi - lo >= limit) {
    Rat mid = (lo + hi) / 2;
    int s = p.sign_at(mid);
    if (s == 0) {
      out = mid;
      return true;
    }
    if (s == s_hi)
      hi = mid;
    else
      lo = mid;
  }
  Rat scaled = hi * lead_abs;
  Int k;
  mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rat cand(k, lead_abs);
  cand.canonicalize();
  if (cand > lo && cand <= hi && p.sign_at(cand) == 0) {
    out = cand;
    return true;
  }
  return false;
}

void isolate_rec(const IntPoly& p, const SturmSequence& sturm, const Rat& lo, const Rat& hi, int count,
                 std::vector<std::pair<Rat, Rat>>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rat mid = (lo + hi) / 2;
  int left = sturm.count(lo, mid);
  isolate_rec(p, sturm, lo, mid, left, out);
  isolate_rec(p, sturm, mid, hi, count - left, out);
}

constexpr int kCanonicalWidthLog2 = 4;  // isolating intervals of width <= 1/16

}  // namespace

RealAlgebraic RealAlgebraic::rational(const Rat& q) {
  RealAlgebraic r;
  r.poly_ = IntPoly(std::vector<Int>{-q.get_num(), q.get_den()});
  r.lo_ = q;
  r.hi_ = q;
  r.index_ = 1;
  return r;
}

RealAlgebraic RealAlgebraic::irrational(IntPoly poly, Rat lo, Rat hi, int index) {
  RealAlgebraic r;
  r.poly_ = std::move(poly);
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  r.index_ = index;
  return r;
}

RealAlgebraic RealAlgebraic::bisected() const {
  if (is_rational()) return *this;
  RealAlgebraic r = *this;
  Rat mid = (lo_ + hi_) / 2;
  if (poly_.sign_at(mid) == poly_.sign_at(hi_))
    r.hi_ = mid;
  else
    r.lo_ = mid;
  return r;
}

RealAlgebraic RealAlgebraic::refined(const Rat& width) const {
  if (is_rational()) return *this;
  RealAlgebraic r = *this;
  const int s_hi = poly_.sign_at(hi_);
  while (r.hi_ - r.lo_ > width) {
    Rat mid = (r.lo_ + r.hi_) / 2;
    if (poly_.sign_at(mid) == s_hi)
      r.hi_ = mid;
    else
      r.lo_ = mid;
  }
  return r;
}

std::string RealAlgebraic::approx(int digits) const {
  if (is_rational()) return to_decimal(lo_, digits);
  Rat width(1);
  for (int i = 0; i < digits + 2; ++i) width /= 10;
  RealAlgebraic r = refined(width);
  return to_decimal((r.lo_ + r.hi_) / 2, digits);
}

double RealAlgebraic::to_double() const {
  if (is_rational()) return lo_.get_d();
  Rat width(Int(1), Int(1) << 60);
  RealAlgebraic r = refined(width);
  Rat mid = (r.lo_ + r.hi_) / 2;
  return mid.get_d();
}

std::vector<RealAlgebraic> isolate_roots(const IntPoly& p) {
  if (p.is_zero()) throw InputError("cannot isolate roots of the zero polynomial");
  IntPoly sq = p.squarefree();
  std::vector<RealAlgebraic> roots;
  if (sq.degree() <= 0) return roots;
  SturmSequence sturm(sq);
  Rat bound = root_bound(sq);
  std::vector<std::pair<Rat, Rat>> boxes;
  isolate_rec(sq, sturm, -bound, bound, sturm.count(-bound, bound), boxes);
  const Rat canonical(Int(1), Int(1) << kCanonicalWidthLog2);
  int index = 0;
  for (auto& [lo, hi] : boxes) {
    ++index;
    Rat q;
    if (find_rational_root(sq, lo, hi, q)) {
      roots.push_back(RealAlgebraic::rational(q));
      continue;
    }
    roots.push_back(RealAlgebraic::irrational(sq, lo, hi, index).refined(canonical));
  }
  return roots;
}

int sign_at_root(const IntPoly& p, const RealAlgebraic& r) {
  if (p.is_zero()) return 0;
  if (r.is_rational()) return p.sign_at(r.rational_value());
  QPoly g = gcd(p.to_q(), r.poly().to_q());
  if (g.degree() > 0) {
    IntPoly gi = IntPoly::primitive_of(g);
    if (SturmSequence(gi).count(r.lo(), r.hi()) > 0) return 0;
  }
  IntPoly sq = p.squarefree();
  if (sq.degree() <= 0) return p.sign_at(r.hi());
  SturmSequence sturm(sq);
  RealAlgebraic cur = r;
  while (sturm.count(cur.lo(), cur.hi()) > 0) cur = cur.bisected();
  return p.sign_at(cur.hi());
}

int sign_at_root(const QPoly& p, const RealAlgebraic& r) { return sign_at_root(IntPoly::primitive_of(p), r); }

std::strong_ordering compare(const Rat& a, const Rat& b) { return to_ordering(cmp(a, b)); }

std::strong_ordering compare(const RealAlgebraic& a, const Rat& b) {
  if (a.is_rational()) return compare(a.rational_value(), b);
  if (b <= a.lo()) return std::strong_ordering::greater;
  if (b >= a.hi()) return std::strong_ordering::less;
  // a is the unique (irrational) root in (lo, hi]; split at b.
  const int sb = a.poly().sign_at(b);
  return sb == a.poly().sign_at(a.hi()) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering compare(const Rat& a, const RealAlgebraic& b) { return 0 <=> compare(b, a); }

std::strong_ordering compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (b.is_rational()) return compare(a, b.rational_value());
  if (a.is_rational()) return compare(a.rational_value(), b);
  RealAlgebraic x = a, y = b;
  bool tested_equal = false;
  for (;;) {
    if (x.hi() <= y.lo()) return std::strong_ordering::less;
    if (y.hi() <= x.lo()) return std::strong_ordering::greater;
    if (!tested_equal) {
      tested_equal = true;
      QPoly g = gcd(x.poly().to_q(), y.poly().to_q());
      if (g.degree() > 0) {
        Rat lo = x.lo() > y.lo() ? x.lo() : y.lo();
        Rat hi = x.hi() < y.hi() ? x.hi() : y.hi();
        if (SturmSequence(IntPoly::primitive_of(g)).count(lo, hi) > 0) return std::strong_ordering::equal;
      }
    }
    x = x.bisected();
    y = y.bisected();
  }
}

std::strong_ordering compare(const RealValue& a, const RealValue& b) {
  return std::visit([](const auto& x, const auto& y) { return compare(x, y); }, a, b);
}

Rat rational_between(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (compare(a, b) != std::strong_ordering::less) throw InputError("rational_between needs a < b");
  RealAlgebraic x = a, y = b;
  while (!(x.hi() < y.lo())) {
    x = x.bisected();
    y = y.bisected();
  }
  return (x.hi() + y.lo()) / 2;
}

Rat rational_between(const RealValue& a, const RealValue& b) {
  return rational_between(to_algebraic(a), to_algebraic(b));
}

RealAlgebraic to_algebraic(const RealValue& v) {
  if (const Rat* q = std::get_if<Rat>(&v)) return RealAlgebraic::rational(*q);
  return std::get<RealAlgebraic>(v);
}

std::pair<Rat, Rat> bracket(const RealAlgebraic& r, const Rat& width) {
  RealAlgebraic t = r.refined(width);
  return {t.lo(), t.hi()};
}

}  // namespace polyhit
