#pragma once

// Independent checks for LP certificates. These touch only the defining
// identities and share no code with the solver.

#include <atomic>
#include <cstddef>
#include <vector>

#include "polyhit/lp.hpp"

namespace polyhit {

template <class F>
bool verify_witness(const BasicSystem<F>& sys, const std::vector<F>& x) {
  if (x.size() != sys.dim) return false;
  for (std::size_t i = 0; i < sys.a.size(); ++i) {
    F lhs(0);
    for (std::size_t j = 0; j < sys.dim; ++j) lhs += sys.a[i][j] * x[j];
    if (sign_of(F(lhs - sys.b[i])) > 0) return false;
  }
  return true;
}

/// y >= 0, y^T A = 0, y^T b < 0.
template <class F>
bool verify_farkas(const BasicSystem<F>& sys, const std::vector<F>& y) {
  if (y.size() != sys.a.size()) return false;
  for (const auto& v : y)
    if (sign_of(v) < 0) return false;
  for (std::size_t j = 0; j < sys.dim; ++j) {
    F col(0);
    for (std::size_t i = 0; i < y.size(); ++i) col += y[i] * sys.a[i][j];
    if (sign_of(col) != 0) return false;
  }
  F yb(0);
  for (std::size_t i = 0; i < y.size(); ++i) yb += y[i] * sys.b[i];
  return sign_of(yb) < 0;
}

/// A r <= 0 and c^T r > 0.
template <class F>
bool verify_ray(const BasicSystem<F>& sys, const std::vector<F>& c, const std::vector<F>& r) {
  if (r.size() != sys.dim || c.size() != sys.dim) return false;
  for (const auto& row : sys.a) {
    F v(0);
    for (std::size_t j = 0; j < sys.dim; ++j) v += row[j] * r[j];
    if (sign_of(v) > 0) return false;
  }
  F cr(0);
  for (std::size_t j = 0; j < sys.dim; ++j) cr += c[j] * r[j];
  return sign_of(cr) > 0;
}

bool verify_witness(const HalfspaceSystem& sys, const RatVector& x);
bool verify_farkas(const HalfspaceSystem& sys, const RatVector& y);
bool verify_ray(const HalfspaceSystem& sys, const RatVector& c, const RatVector& r);

/// Running tally of audited certificates (process-wide).
struct CertificateAudit {
  std::size_t witnesses_checked = 0, witnesses_failed = 0;
  std::size_t farkas_checked = 0, farkas_failed = 0;
  std::size_t rays_checked = 0, rays_failed = 0;
};

void set_certificate_audit(bool enabled);
bool certificate_audit_enabled();
CertificateAudit certificate_audit_snapshot();
void reset_certificate_audit();

enum class CertificateKind { witness, farkas, ray };
void record_certificate(CertificateKind kind, bool ok);

/// Checks `result` against `sys` and records the outcome when auditing is on.
template <class F>
void audit_result(const BasicSystem<F>& sys, const LpResult<F>& result, const std::vector<F>* objective) {
  if (!certificate_audit_enabled()) return;
  switch (result.status) {
    case LpStatus::feasible:
    case LpStatus::optimal:
      record_certificate(CertificateKind::witness, verify_witness(sys, result.point));
      break;
    case LpStatus::infeasible:
      record_certificate(CertificateKind::farkas, verify_farkas(sys, result.point));
      break;
    case LpStatus::unbounded:
      record_certificate(CertificateKind::ray, objective && verify_ray(sys, *objective, result.point));
      break;
  }
}

template <class F>
LpResult<F> audited_feasible(const BasicSystem<F>& sys) {
  auto res = lp_feasible(sys);
  audit_result(sys, res, static_cast<const std::vector<F>*>(nullptr));
  return res;
}

template <class F>
LpResult<F> audited_optimize(const std::vector<F>& c, const BasicSystem<F>& sys) {
  auto res = lp_optimize(c, sys);
  audit_result(sys, res, &c);
  return res;
}

/// check_bounded with every inner optimization audited.
template <class F>
bool audited_check_bounded(const BasicSystem<F>& sys) {
  BasicSystem<F> hom{sys.a, std::vector<F>(sys.a.size(), F(0)), sys.dim};
  for (std::size_t j = 0; j < sys.dim; ++j) {
    for (int s : {1, -1}) {
      std::vector<F> c(sys.dim, F(0));
      c[j] = F(s);
      if (audited_optimize(c, hom).status == LpStatus::unbounded) return false;
    }
  }
  return true;
}

}  // namespace polyhit
