#include "polyhit/algfield.hpp"

#include <stdexcept>
#include <utility>

namespace polyhit {

namespace {

struct RatRange {
  Rat lo, hi;
};

RatRange mul(const RatRange& a, const RatRange& b) {
  Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  RatRange out{p[0], p[0]};
  for (const auto& v : p) {
    if (v < out.lo) out.lo = v;
    if (v > out.hi) out.hi = v;
  }
  return out;
}

constexpr int kIntervalRounds = 8;

}  // namespace

AlgContext::AlgContext(const RealAlgebraic& root) : modulus_(root.poly().to_q().monic()), root_(root) {
  if (root.is_rational()) modulus_ = QPoly::linear(-root.rational_value(), 1);
}

QPoly AlgContext::reduce(const QPoly& v) const {
  if (v.degree() < modulus_.degree()) return v;
  return rem(v, modulus_);
}

void AlgContext::split(const QPoly& g) {
  if (g.degree() <= 0 || g.degree() >= modulus_.degree()) return;
  QPoly other = divmod(modulus_, g).first;
  modulus_ = sign_at_root(g, root_) == 0 ? g.monic() : other.monic();
}

int AlgContext::interval_sign(const QPoly& v) const {
  const auto& c = v.coeffs();
  RatRange x{root_.lo(), root_.hi()};
  RatRange acc{c.back(), c.back()};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = mul(acc, x);
    acc.lo += c[k];
    acc.hi += c[k];
  }
  if (acc.lo > 0) return 1;
  if (acc.hi < 0) return -1;
  return 0;
}

int AlgContext::sign(const QPoly& raw) {
  QPoly v = reduce(raw);
  if (v.degree() <= 0) return v.is_zero() ? 0 : sgn(v.lead());
  for (int i = 0; i < kIntervalRounds; ++i) {
    if (int s = interval_sign(v)) return s;
    root_ = root_.bisected();
  }
  for (;;) {
    QPoly g = gcd(v, modulus_);
    if (g.degree() <= 0) break;
    split(g);
    v = reduce(v);
    if (v.degree() <= 0) return v.is_zero() ? 0 : sgn(v.lead());
  }
  // v(lambda) != 0 now, so refinement terminates
  for (;;) {
    if (int s = interval_sign(v)) return s;
    root_ = root_.bisected();
  }
}

QPoly AlgContext::inverse(const QPoly& raw) {
  for (;;) {
    QPoly v = reduce(raw);
    if (v.is_zero()) throw std::domain_error("division by zero in Q(lambda)");
    auto [g, s] = gcd_with_inverse(v, modulus_);
    if (g.degree() == 0) return s;
    if (sign_at_root(g, root_) == 0) throw std::domain_error("division by zero in Q(lambda)");
    split(g);
  }
}

AlgNum::AlgNum(std::shared_ptr<AlgContext> ctx, QPoly v) : ctx_(std::move(ctx)), v_(std::move(v)) {
  if (ctx_) v_ = ctx_->reduce(v_);
}

AlgNum AlgNum::generator(const std::shared_ptr<AlgContext>& ctx) { return AlgNum(ctx, QPoly::linear(0, 1)); }

void AlgNum::adopt(const AlgNum& o) {
  if (!ctx_ && o.ctx_) ctx_ = o.ctx_;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  adopt(o);
  v_ += o.v_;
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
  adopt(o);
  v_ -= o.v_;
  return *this;
}

AlgNum& AlgNum::operator*=(const AlgNum& o) {
  adopt(o);
  if (o.v_.degree() <= 0) {
    v_ *= o.v_.coeff(0);
    return *this;
  }
  v_ = v_ * o.v_;
  if (ctx_) v_ = ctx_->reduce(v_);
  return *this;
}

AlgNum& AlgNum::operator/=(const AlgNum& o) {
  adopt(o);
  if (o.v_.degree() <= 0) {
    if (o.v_.is_zero()) throw std::domain_error("division by zero in Q(lambda)");
    v_ *= 1 / o.v_.lead();
    return *this;
  }
  v_ = ctx_->reduce(v_ * ctx_->inverse(o.v_));
  return *this;
}

int sign_of(const AlgNum& x) {
  if (x.v_.degree() <= 0) return x.v_.is_zero() ? 0 : sgn(x.v_.lead());
  return x.ctx_->sign(x.v_);
}

}  // namespace polyhit
