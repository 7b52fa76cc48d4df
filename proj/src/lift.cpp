#include "polyhit/lift.hpp"

namespace polyhit {

RatVector LiftOutput::lift_point(const RatVector& x_f, const RatVector& omega) const {
  if (x_f.size() != ell || omega.size() != p) throw InputError("lift_point: dimension mismatch");
  RatVector z(dim);
  for (std::size_t j = 0; j < ell; ++j) z[j] = x_f[j];
  for (std::size_t i = 0; i < p; ++i) {
    z[ell + i] = omega[i];
    for (std::size_t j = 0; j < ell; ++j) z[ell + p + i * ell + j] = omega[i] * x_f[j];
  }
  return z;
}

LiftOutput lift_instance(const AdaptInstance& inst, const Rat& t) {
  inst.validate();
  if (inst.ell() == 0) throw Unsupported("lift_instance needs ell >= 1; use the adaptability solver for ell = 0");
  const FirstStage& fs = *inst.first;
  const std::size_t ell = fs.ell, p = inst.p(), ds = inst.d_s(), m = inst.m();
  const std::size_t dim = ell + p + ell * p;
  const std::size_t nbox = inst.box.size();
  const std::size_t rows = m + 1 + 2 * nbox;
  auto z_omega = [&](std::size_t i) { return ell + i; };
  auto z_block = [&](std::size_t i, std::size_t j) { return ell + p + i * ell + j; };

  // Row r reads  sum_c (base + x_s . slopes) z_c <= rhs(x_s).
  AffineMatrixMap a{RatMatrix(rows, dim), std::vector<RatMatrix>(ds, RatMatrix(rows, dim))};
  AffineVectorMap b{RatVector(rows), std::vector<RatVector>(ds, RatVector(rows))};
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < ell; ++j) a.base(r, j) = fs.a_f.base(r, j);
    for (std::size_t i = 0; i < p; ++i) {
      a.base(r, z_omega(i)) = -inst.b.slopes[i][r];
      for (std::size_t c = 0; c < ds; ++c) a.slopes[c](r, z_omega(i)) = inst.a_s.slopes[i](r, c);
      for (std::size_t j = 0; j < ell; ++j) a.base(r, z_block(i, j)) = fs.a_f.slopes[i](r, j);
    }
    b.base[r] = inst.b.base[r];
    for (std::size_t c = 0; c < ds; ++c) b.slopes[c][r] = -inst.a_s.base(r, c);
  }
  for (std::size_t j = 0; j < ell; ++j) a.base(m, j) = fs.c_f[j];
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t c = 0; c < ds; ++c) a.slopes[c](m, z_omega(i)) = inst.c_s.slopes[i][c];
  b.base[m] = t;
  for (std::size_t c = 0; c < ds; ++c) b.slopes[c][m] = -inst.c_s.base[c];
  for (std::size_t j = 0; j < nbox; ++j) {
    // lo_j <= x_s[j] <= hi_j has no z-dependence: 0 <= hi_j - x_s[j], 0 <= x_s[j] - lo_j
    const std::size_t r = m + 1 + 2 * j;
    b.base[r] = inst.box[j].second;
    b.slopes[j][r] = -1;
    b.base[r + 1] = -inst.box[j].first;
    b.slopes[j][r + 1] = 1;
  }

  LiftOutput out{ell, p, dim, AffineFamily(std::move(a), std::move(b), ParameterDomain::unrestricted(ds)), {}, {}};
  for (const auto& v : inst.omega.generators()) {
    LiftedVertex lv{v, RatMatrix(dim, ell), RatVector(dim)};
    for (std::size_t j = 0; j < ell; ++j) lv.linear(j, j) = 1;
    for (std::size_t i = 0; i < p; ++i) {
      lv.offset[z_omega(i)] = v[i];
      for (std::size_t j = 0; j < ell; ++j) lv.linear(z_block(i, j), j) = v[i];
    }
    out.p_hat_vertices.push_back(std::move(lv));
  }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < ell; ++j) out.surface.push_back({z_block(i, j), j, z_omega(i)});
  return out;
}

}  // namespace polyhit
