#include "polyhit/poly.hpp"

#include <algorithm>

namespace polyhit {

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rat& c) { return QPoly(std::vector<Rat>{c}); }

QPoly QPoly::linear(const Rat& a0, const Rat& a1) { return QPoly(std::vector<Rat>{a0, a1}); }

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly out = *this;
  Rat inv = 1 / lead();
  for (auto& v : out.c_) v *= inv;
  return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rat& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rat> r = a.coeffs();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  const Rat inv_lead = 1 / b.lead();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rat f = r[static_cast<std::size_t>(k + b.degree())] * inv_lead;
    q[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(k) + j] -= f * bc[j];
  }
  r.resize(static_cast<std::size_t>(b.degree()));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly rem(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = rem(x, y);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::pair<QPoly, QPoly> gcd_with_inverse(const QPoly& a, const QPoly& m) {
  // invariants: r0 = s0*a (mod m), r1 = s1*a (mod m)
  QPoly r0 = m, r1 = rem(a, m);
  QPoly s0, s1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {QPoly(), QPoly()};
  Rat inv = 1 / r0.lead();
  return {r0 * inv, rem(s0 * inv, m)};
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly IntPoly::primitive_of(const QPoly& q) {
  if (q.is_zero()) return {};
  Int lcm_den = 1;
  for (const auto& v : q.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Int> c;
  c.reserve(q.coeffs().size());
  Int content = 0;
  for (const auto& v : q.coeffs()) {
    Int n = v.get_num() * (lcm_den / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    c.push_back(std::move(n));
  }
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return IntPoly(std::move(c));
}

QPoly IntPoly::to_q() const {
  std::vector<Rat> c(c_.begin(), c_.end());
  return QPoly(std::move(c));
}

int IntPoly::sign_at(const Rat& x) const {
  // homogeneous Horner: sum a_i p^i q^(n-i), q > 0
  if (c_.empty()) return 0;
  const Int& p = x.get_num();
  const Int& q = x.get_den();
  Int acc = c_.back();
  Int qpow = 1;
  for (std::size_t k = c_.size() - 1; k-- > 0;) {
    qpow *= q;
    acc = acc * p + c_[k] * qpow;
  }
  return sgn(acc);
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  std::vector<Int> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

IntPoly IntPoly::normalized() const {
  IntPoly out = primitive_of(to_q());
  if (!out.is_zero() && sgn(out.lead()) < 0)
    for (auto& v : out.c_) v = -v;
  return out;
}

IntPoly IntPoly::squarefree() const {
  if (degree() <= 0) return normalized();
  QPoly q = to_q();
  QPoly g = gcd(q, q.derivative());
  return primitive_of(divmod(q, g).first).normalized();
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string IntPoly::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].get_str();
  }
  return s + "]";
}

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) return;
  seq_.push_back(p);
  IntPoly d = p.derivative();
  if (d.is_zero()) return;
  seq_.push_back(IntPoly::primitive_of(d.to_q()));
  for (;;) {
    QPoly r = rem(seq_[seq_.size() - 2].to_q(), seq_.back().to_q());
    if (r.is_zero()) break;
    seq_.push_back(IntPoly::primitive_of(-r));
  }
}

int SturmSequence::variations(const Rat& x) const {
  int changes = 0, last = 0;
  for (const auto& s : seq_) {
    int v = s.sign_at(x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

Rat root_bound(const IntPoly& p) {
  // Cauchy: 1 + max |a_i / a_n|
  Rat m = 0;
  Int lead_abs = abs(p.lead());
  for (int i = 0; i < p.degree(); ++i) {
    Rat r(abs(p.coeffs()[static_cast<std::size_t>(i)]), lead_abs);
    r.canonicalize();
    if (r > m) m = r;
  }
  Rat bound = m + 1;
  Rat b = 1;
  while (b < bound) b *= 2;
  return b;
}

}  // namespace polyhit
