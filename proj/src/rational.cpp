#include "polyhit/rational.hpp"

#include <cctype>

namespace polyhit {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::mul(const RatVector& x) const {
  if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  RatVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatVector axpy(const Rat& alpha, const RatVector& x, const RatVector& y) {
  if (x.size() != y.size()) throw InputError("axpy: dimension mismatch");
  RatVector out(y);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += alpha * x[i];
  return out;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int parse_int(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return Int(t, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) throw InputError("not a rational: '" + std::string(text) + "'");
    return Rat(parse_int(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw InputError("not a rational: '" + std::string(text) + "'");
  Int d = parse_int(den);
  if (d == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  Rat q(parse_int(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(10); }

std::string to_decimal(const Rat& q, int digits) {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rat a = abs(q) * scale;
  // round half away from zero
  Int scaled = (a.get_num() * 2 + a.get_den()) / (a.get_den() * 2);
  std::string s = scaled.get_str(10);
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  if (sgn(q) < 0 && scaled != 0) out.insert(0, "-");
  return out;
}

namespace {

// Simplest rational in [lo, hi] for 0 <= lo <= hi, via continued fractions.
Rat simplest_nonneg(const Rat& lo, const Rat& hi) {
  Int fl = lo.get_num() / lo.get_den();  // floor, lo >= 0
  if (Rat(fl) == lo) return Rat(fl);
  if (Rat(fl + 1) <= hi) return Rat(fl + 1);
  // fl < lo <= hi < fl + 1: recurse on reciprocals of fractional parts
  Rat lo_frac = lo - fl;
  Rat hi_frac = hi - fl;
  Rat inner = simplest_nonneg(Rat(1) / hi_frac, Rat(1) / lo_frac);
  return Rat(fl) + Rat(1) / inner;
}

}  // namespace

Rat simplest_in(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw InputError("simplest_in: empty interval");
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rat(0);
  if (sgn(lo) > 0) return simplest_nonneg(lo, hi);
  return -simplest_nonneg(-hi, -lo);
}

}  // namespace polyhit
