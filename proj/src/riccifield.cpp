#include "ricci2d/riccifield.hpp"

#include <algorithm>

namespace ricci2d {

namespace {

std::vector<Expr> guards_for(const DiagonalMetric& m, std::span<const Expr> exprs) {
  std::vector<Expr> guards = m.guards();
  for (const auto& e : exprs) {
    for (auto& g : singular_factors(e)) {
      if (std::find(guards.begin(), guards.end(), g) == guards.end()) guards.push_back(g);
    }
  }
  return guards;
}

}  // namespace

CovariantMatrix covariant_matrix(const DiagonalMetric& m, const FrameField& v) {
  const auto [h12, h21] = channel_coefficients(m);
  const auto e1 = [&](const Expr& u) { return frame_derivative(m, u, FrameIndex::E1); };
  const auto e2 = [&](const Expr& u) { return frame_derivative(m, u, FrameIndex::E2); };
  return {
      .e11 = simplify(e1(v.e1) - h12 * v.e2),
      .e12 = simplify(e1(v.e2) + h12 * v.e1),
      .e21 = simplify(e2(v.e1) + h21 * v.e2),
      .e22 = simplify(e2(v.e2) - h21 * v.e1),
  };
}

std::array<Expr, 4> residual_system(const DiagonalMetric& m, const FrameField& v) {
  const CovariantMatrix c = covariant_matrix(m, v);
  const Expr rho = ricci(m).rho;
  return {simplify(c.e11 - rho), simplify(c.e22 - rho), c.e12, c.e21};
}

ResidualReport verify(const DiagonalMetric& m, const FrameField& v, const Domain& d,
                      const SamplingConfig& cfg) {
  ResidualReport report;
  report.residuals = residual_system(m, v);
  report.seed = cfg.seed;
  report.tolerance = cfg.tolerance;
  const auto guards = guards_for(m, report.residuals);
  const auto points = sample_points(d, cfg, guards);
  report.points_used = points.size();
  for (std::size_t k = 0; k < 4; ++k) report.max_abs[k] = max_abs(report.residuals[k], points);
  report.pass = std::all_of(report.max_abs.begin(), report.max_abs.end(),
                            [&](double r) { return r <= cfg.tolerance; });
  return report;
}

FrameField from_coordinates(const DiagonalMetric& m, const Expr& a, const Expr& b) {
  return {simplify(a / m.f1()), simplify(b / m.f2())};
}

FrameField to_coordinates(const DiagonalMetric& m, const FrameField& v) {
  return {simplify(v.e1 * m.f1()), simplify(v.e2 * m.f2())};
}

Expr divergence(const DiagonalMetric& m, const FrameField& v) {
  const CovariantMatrix c = covariant_matrix(m, v);
  return simplify(c.e11 + c.e22);
}

Expr closedness_defect(const DiagonalMetric& m, const FrameField& v) {
  const CovariantMatrix c = covariant_matrix(m, v);
  return simplify(c.e12 - c.e21);
}

double parallel_defect(const DiagonalMetric& m, const FrameField& v, const Domain& d,
                       const SamplingConfig& cfg) {
  const auto entries = covariant_matrix(m, v).entries();
  const auto points = sample_points(d, cfg, guards_for(m, entries));
  double worst = 0.0;
  for (const auto& e : entries) worst = std::max(worst, max_abs(e, points));
  return worst;
}

}  // namespace ricci2d
