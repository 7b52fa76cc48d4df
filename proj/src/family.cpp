#include "polyhit/family.hpp"

#include <string>

namespace polyhit {

RatMatrix AffineMatrixMap::at(const RatVector& w) const {
  if (w.size() != params()) throw InputError("parameter has dimension " + std::to_string(w.size()) +
                                             ", expected " + std::to_string(params()));
  RatMatrix out = base;
  for (std::size_t k = 0; k < slopes.size(); ++k) {
    if (sgn(w[k]) == 0) continue;
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols(); ++c) out(r, c) += w[k] * slopes[k](r, c);
  }
  return out;
}

void AffineMatrixMap::validate() const {
  if (slopes.empty()) throw InputError("affine matrix map needs at least one parameter");
  for (const auto& s : slopes)
    if (s.rows() != base.rows() || s.cols() != base.cols())
      throw InputError("affine matrix map: slope matrix dimensions differ from base");
}

RatVector AffineVectorMap::at(const RatVector& w) const {
  if (w.size() != params()) throw InputError("parameter dimension mismatch");
  RatVector out = base;
  for (std::size_t k = 0; k < slopes.size(); ++k) {
    if (sgn(w[k]) == 0) continue;
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += w[k] * slopes[k][r];
  }
  return out;
}

void AffineVectorMap::validate() const {
  if (slopes.empty()) throw InputError("affine vector map needs at least one parameter");
  for (const auto& s : slopes)
    if (s.size() != base.size()) throw InputError("affine vector map: slope length differs from base");
}

ParameterDomain ParameterDomain::interval(Rat alpha, Rat beta) {
  if (alpha > beta) throw InputError("interval domain requires alpha <= beta");
  return ParameterDomain(IntervalDomain{std::move(alpha), std::move(beta)}, 1);
}

ParameterDomain ParameterDomain::vertices(std::vector<RatVector> vs) {
  if (vs.empty()) throw InputError("vertex domain requires at least one vertex");
  std::size_t p = vs.front().size();
  if (p == 0) throw InputError("vertex domain requires p >= 1");
  for (const auto& v : vs)
    if (v.size() != p) throw InputError("vertex domain: vertices of different dimension");
  return ParameterDomain(VertexDomain{std::move(vs)}, p);
}

ParameterDomain ParameterDomain::unrestricted(std::size_t dim) { return ParameterDomain(Unrestricted{}, dim); }

const IntervalDomain& ParameterDomain::as_interval() const {
  if (!is_interval()) throw Unsupported("parameter domain is not an interval");
  return std::get<IntervalDomain>(storage_);
}

const VertexDomain& ParameterDomain::as_vertices() const {
  if (!is_vertices()) throw Unsupported("parameter domain is not a vertex list");
  return std::get<VertexDomain>(storage_);
}

std::vector<RatVector> ParameterDomain::generators() const {
  if (is_interval()) {
    const auto& iv = as_interval();
    if (iv.alpha == iv.beta) return {{iv.alpha}};
    return {{iv.alpha}, {iv.beta}};
  }
  if (is_vertices()) return as_vertices().vertices;
  throw Unsupported("unrestricted domain has no finite generating set");
}

bool operator==(const ParameterDomain& a, const ParameterDomain& b) {
  if (a.dim_ != b.dim_ || a.storage_.index() != b.storage_.index()) return false;
  if (a.is_interval()) return a.as_interval().alpha == b.as_interval().alpha && a.as_interval().beta == b.as_interval().beta;
  if (a.is_vertices()) return a.as_vertices().vertices == b.as_vertices().vertices;
  return true;
}

void HalfspaceSystem::validate() const {
  if (a.rows() != b.size()) throw InputError("halfspace system: row count differs from rhs length");
}

HalfspaceSystem HalfspaceSystem::stacked(const HalfspaceSystem& other) const {
  if (dim() != other.dim()) throw InputError("stacking systems of different dimension");
  HalfspaceSystem out{RatMatrix(rows() + other.rows(), dim()), b};
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) out.a(r, c) = a(r, c);
  for (std::size_t r = 0; r < other.rows(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) out.a(rows() + r, c) = other.a(r, c);
  out.b.insert(out.b.end(), other.b.begin(), other.b.end());
  return out;
}

RatInterval RatInterval::closed(Rat lo, Rat hi) {
  if (lo > hi) throw InputError("interval with lo > hi");
  RatInterval iv;
  iv.bounds_.emplace(std::move(lo), std::move(hi));
  return iv;
}

AffineFamily::AffineFamily(AffineMatrixMap a, AffineVectorMap b, ParameterDomain domain)
    : a_(std::move(a)), b_(std::move(b)), domain_(std::move(domain)) {
  a_.validate();
  b_.validate();
  if (a_.rows() != b_.size()) throw InputError("family: A and b disagree on row count m");
  if (a_.params() != b_.params()) throw InputError("family: A and b disagree on parameter count p");
  if (domain_.dim() != a_.params()) throw InputError("family: domain dimension differs from p");
}

const IntervalDomain& AffineFamily::interval() const {
  if (p() != 1) throw Unsupported("operation requires a one-parameter family (p = 1)");
  return domain_.as_interval();
}

HalfspaceSystem member_eval(const AffineFamily& family, const RatVector& omega) {
  HalfspaceSystem sys{family.a().at(omega), family.b().at(omega)};
  return sys;
}

bool membership(const RatVector& x, const HalfspaceSystem& sys) {
  if (x.size() != sys.dim()) throw InputError("membership: point dimension mismatch");
  for (std::size_t r = 0; r < sys.rows(); ++r) {
    Rat lhs = 0;
    for (std::size_t c = 0; c < sys.dim(); ++c) lhs += sys.a(r, c) * x[c];
    if (lhs > sys.b[r]) return false;
  }
  return true;
}

AffineFamily dual_family(const AffineFamily& family) {
  const std::size_t m = family.m(), d = family.d(), p = family.p();
  // member at x: sum_i (A_i x - b_i) w_i <= b_0 - A_0 x
  AffineMatrixMap da{RatMatrix(m, p), std::vector<RatMatrix>(d, RatMatrix(m, p))};
  AffineVectorMap db{family.b().base, std::vector<RatVector>(d, RatVector(m))};
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < p; ++i) {
      da.base(r, i) = -family.b().slopes[i][r];
      for (std::size_t j = 0; j < d; ++j) da.slopes[j](r, i) = family.a().slopes[i](r, j);
    }
    for (std::size_t j = 0; j < d; ++j) db.slopes[j][r] = -family.a().base(r, j);
  }
  return AffineFamily(std::move(da), std::move(db), ParameterDomain::unrestricted(d));
}

RatInterval dual_interval(const AffineFamily& family, const RatVector& x) {
  const auto& iv = family.interval();
  if (x.size() != family.d()) throw InputError("dual_interval: point dimension mismatch");
  Rat lo = iv.alpha, hi = iv.beta;
  const auto& a0 = family.a().base;
  const auto& a1 = family.a().slopes[0];
  for (std::size_t r = 0; r < family.m(); ++r) {
    // row reads  c + w * s <= 0
    Rat c = -family.b().base[r];
    Rat s = -family.b().slopes[0][r];
    for (std::size_t j = 0; j < family.d(); ++j) {
      c += a0(r, j) * x[j];
      s += a1(r, j) * x[j];
    }
    int ss = sgn(s);
    if (ss == 0) {
      if (sgn(c) > 0) return RatInterval::empty();
      continue;
    }
    Rat t = -c / s;
    if (ss > 0) {
      if (t < hi) hi = t;
    } else if (t > lo) {
      lo = t;
    }
  }
  if (lo > hi) return RatInterval::empty();
  return RatInterval::closed(lo, hi);
}

AffineFamily restrict_domain(const AffineFamily& family, const ParameterDomain& domain) {
  if (domain.dim() != family.p()) throw InputError("restrict_domain: domain dimension differs from p");
  return AffineFamily(family.a(), family.b(), domain);
}

}  // namespace polyhit
