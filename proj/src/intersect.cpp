#include "polyhit/intersect.hpp"

namespace polyhit {

IntersectionSystem common_intersection(const AffineFamily& family) {
  IntersectionSystem out;
  out.generators = family.domain().generators();
  const std::size_t m = family.m(), d = family.d();
  out.sys.a = RatMatrix(m * out.generators.size(), d);
  out.sys.b.reserve(m * out.generators.size());
  std::size_t row = 0;
  for (const auto& w : out.generators) {
    HalfspaceSystem member = member_eval(family, w);
    for (std::size_t r = 0; r < m; ++r, ++row) {
      for (std::size_t c = 0; c < d; ++c) out.sys.a(row, c) = member.a(r, c);
      out.sys.b.push_back(member.b[r]);
    }
  }
  return out;
}

LpOutcome hit_one_point(const AffineFamily& family) { return lp_feasible(common_intersection(family).sys); }

}  // namespace polyhit
