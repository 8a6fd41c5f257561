#include "ricci2d/identities.hpp"

#include <algorithm>
#include <initializer_list>

#include "ricci2d/riccifield.hpp"

namespace ricci2d {

namespace {

Expr directional(const DiagonalMetric& m, const FrameField& x, const Expr& u) {
  return simplify(x.e1 * frame_derivative(m, u, FrameIndex::E1) +
                  x.e2 * frame_derivative(m, u, FrameIndex::E2));
}

Expr norm_squared(const FrameField& v) { return simplify(v.e1 * v.e1 + v.e2 * v.e2); }

double sampled_defect(const DiagonalMetric& m, std::initializer_list<Expr> defects,
                      const Domain& d, const SamplingConfig& cfg) {
  std::vector<Expr> guards = m.guards();
  for (const auto& e : defects) {
    for (auto& g : singular_factors(e)) {
      if (std::find(guards.begin(), guards.end(), g) == guards.end()) guards.push_back(g);
    }
  }
  const auto points = sample_points(d, cfg, guards);
  double worst = 0.0;
  for (const auto& e : defects) worst = std::max(worst, max_abs(e, points));
  return worst;
}

IdentityCheck finish(bool member, double defect, const SamplingConfig& cfg) {
  return {member && defect <= cfg.tolerance, member, defect};
}

bool is_member(const DiagonalMetric& m, const FrameField& v, const Domain& d,
               const SamplingConfig& cfg) {
  return verify(m, v, d, cfg).pass;
}

}  // namespace

IdentityCheck check_ric_vv(const DiagonalMetric& m, const FrameField& v, const Domain& d,
                           const SamplingConfig& cfg) {
  const bool member = is_member(m, v, d, cfg);
  const Expr rho = ricci(m).rho;
  const Expr lhs = rho * norm_squared(v);
  const Expr rhs = Expr(0.5) * directional(m, v, norm_squared(v));
  return finish(member, sampled_defect(m, {simplify(lhs - rhs)}, d, cfg), cfg);
}

IdentityCheck check_scalar_divergence(const DiagonalMetric& m, const FrameField& v,
                                      const Domain& d, const SamplingConfig& cfg) {
  const bool member = is_member(m, v, d, cfg);
  const Expr defect = simplify(divergence(m, v) - ricci(m).r);
  return finish(member, sampled_defect(m, {defect}, d, cfg), cfg);
}

IdentityCheck check_norm_symmetry(const DiagonalMetric& m, const FrameField& v1,
                                  const FrameField& v2, const Domain& d,
                                  const SamplingConfig& cfg) {
  const bool member = is_member(m, v1, d, cfg) && is_member(m, v2, d, cfg);
  const Expr defect =
      simplify(directional(m, v1, norm_squared(v2)) - directional(m, v2, norm_squared(v1)));
  return finish(member, sampled_defect(m, {defect}, d, cfg), cfg);
}

FrameField curvature_applied(const DiagonalMetric& m, const FrameField& v) {
  const FrameField along_e1 = covariant_derivative(m, v, FrameIndex::E1);
  const FrameField along_e2 = covariant_derivative(m, v, FrameIndex::E2);
  const FrameField first = covariant_derivative(m, along_e2, FrameIndex::E1);
  const FrameField second = covariant_derivative(m, along_e1, FrameIndex::E2);
  const FrameField bracket = covariant_derivative(m, v, lie_bracket(m));
  return simplify(first - second - bracket);
}

IdentityCheck check_curvature_identity(const DiagonalMetric& m, const FrameField& v,
                                       const Domain& d, const SamplingConfig& cfg) {
  const bool member = is_member(m, v, d, cfg);
  const FrameField lhs = curvature_applied(m, v);
  // Q = rho Id, so (nabla_X Q) Y = X(rho) Y and the right side is
  // E1(rho) E2 - E2(rho) E1.
  const Expr rho = ricci(m).rho;
  const FrameField rhs{simplify(-frame_derivative(m, rho, FrameIndex::E2)),
                       frame_derivative(m, rho, FrameIndex::E1)};
  const FrameField defect = simplify(lhs - rhs);
  return finish(member, sampled_defect(m, {defect.e1, defect.e2}, d, cfg), cfg);
}

FrameField gradient_field(const DiagonalMetric& m, const PotentialFunction& p) {
  return {frame_derivative(m, p.f, FrameIndex::E1), frame_derivative(m, p.f, FrameIndex::E2)};
}

FrameMatrix hessian(const DiagonalMetric& m, const PotentialFunction& p) {
  const ConnectionTable table = connection_table(m);
  const FrameField grad = gradient_field(m, p);
  FrameMatrix out;
  for (FrameIndex i : {FrameIndex::E1, FrameIndex::E2}) {
    for (FrameIndex j : {FrameIndex::E1, FrameIndex::E2}) {
      const FrameField& nabla_ij = table(i, j);
      const Expr second = frame_derivative(m, grad[j], i);
      const Expr correction = nabla_ij.e1 * grad.e1 + nabla_ij.e2 * grad.e2;
      out[static_cast<int>(i) - 1][static_cast<int>(j) - 1] = simplify(second - correction);
    }
  }
  return out;
}

Expr laplacian(const DiagonalMetric& m, const PotentialFunction& p) {
  const FrameMatrix h = hessian(m, p);
  return simplify(h[0][0] + h[1][1]);
}

IdentityCheck check_steady_soliton(const DiagonalMetric& m, const PotentialFunction& p,
                                   const Domain& d, const SamplingConfig& cfg) {
  const bool member = is_member(m, gradient_field(m, p), d, cfg);
  const FrameMatrix h = hessian(m, p);
  const Expr rho = ricci(m).rho;
  const double defect = sampled_defect(
      m, {simplify(h[0][0] - rho), h[0][1], h[1][0], simplify(h[1][1] - rho)}, d, cfg);
  return finish(member, defect, cfg);
}

IdentityCheck check_laplacian(const DiagonalMetric& m, const PotentialFunction& p,
                              const Domain& d, const SamplingConfig& cfg) {
  const bool member = is_member(m, gradient_field(m, p), d, cfg);
  const Expr defect = simplify(laplacian(m, p) - ricci(m).r);
  return finish(member, sampled_defect(m, {defect}, d, cfg), cfg);
}

}  // namespace ricci2d
