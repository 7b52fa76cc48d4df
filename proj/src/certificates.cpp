#include "polyhit/certificates.hpp"

namespace polyhit {

namespace {

std::atomic<bool> g_enabled{false};
std::atomic<std::size_t> g_counts[6];

}  // namespace

bool verify_witness(const HalfspaceSystem& sys, const RatVector& x) { return verify_witness(to_basic(sys), x); }
bool verify_farkas(const HalfspaceSystem& sys, const RatVector& y) { return verify_farkas(to_basic(sys), y); }
bool verify_ray(const HalfspaceSystem& sys, const RatVector& c, const RatVector& r) {
  return verify_ray(to_basic(sys), c, r);
}

void set_certificate_audit(bool enabled) { g_enabled.store(enabled); }
bool certificate_audit_enabled() { return g_enabled.load(std::memory_order_relaxed); }

void record_certificate(CertificateKind kind, bool ok) {
  auto base = static_cast<std::size_t>(kind) * 2;
  g_counts[base].fetch_add(1);
  if (!ok) g_counts[base + 1].fetch_add(1);
}

CertificateAudit certificate_audit_snapshot() {
  CertificateAudit a;
  a.witnesses_checked = g_counts[0];
  a.witnesses_failed = g_counts[1];
  a.farkas_checked = g_counts[2];
  a.farkas_failed = g_counts[3];
  a.rays_checked = g_counts[4];
  a.rays_failed = g_counts[5];
  return a;
}

void reset_certificate_audit() {
  for (auto& c : g_counts) c.store(0);
}

}  // namespace polyhit
