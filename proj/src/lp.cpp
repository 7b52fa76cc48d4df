#include "polyhit/lp.hpp"

#include "polyhit/certificates.hpp"

namespace polyhit {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::feasible: return "feasible";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::optimal: return "optimal";
  }
  return "?";
}

BasicSystem<Rat> to_basic(const HalfspaceSystem& sys) {
  sys.validate();
  BasicSystem<Rat> out;
  out.dim = sys.dim();
  out.a.reserve(sys.rows());
  for (std::size_t r = 0; r < sys.rows(); ++r) out.a.push_back(sys.a.row(r));
  out.b = sys.b;
  return out;
}

LpOutcome lp_feasible(const HalfspaceSystem& sys) { return audited_feasible(to_basic(sys)); }

LpOutcome lp_optimize(const RatVector& c, const HalfspaceSystem& sys) { return audited_optimize(c, to_basic(sys)); }

bool check_bounded(const HalfspaceSystem& sys) { return audited_check_bounded(to_basic(sys)); }

}  // namespace polyhit
