#include "ricci2d/geometry.hpp"

namespace ricci2d {

FrameField operator+(const FrameField& a, const FrameField& b) {
  return {a.e1 + b.e1, a.e2 + b.e2};
}

FrameField operator-(const FrameField& a, const FrameField& b) {
  return {a.e1 - b.e1, a.e2 - b.e2};
}

FrameField operator*(const Expr& s, const FrameField& v) { return {s * v.e1, s * v.e2}; }

FrameField simplify(const FrameField& v) { return {simplify(v.e1), simplify(v.e2)}; }

void require_nowhere_zero(const DiagonalMetric& m, const Domain& d, const SamplingConfig& cfg) {
  for (FrameIndex i : {FrameIndex::E1, FrameIndex::E2}) {
    if (auto p = find_zero(m.factor(i), d, cfg)) {
      throw SingularDomainError("metric factor f" + std::to_string(static_cast<int>(i)) + " = " +
                                to_string(m.factor(i)) + " vanishes near (" +
                                std::to_string(p->x1) + ", " + std::to_string(p->x2) + ")");
    }
  }
}

Expr frame_derivative(const DiagonalMetric& m, const Expr& u, FrameIndex i) {
  const Var v = i == FrameIndex::E1 ? Var::X1 : Var::X2;
  return simplify(m.factor(i) * differentiate(u, v));
}

ChannelCoefficients channel_coefficients(const DiagonalMetric& m) {
  const Expr& f1 = m.f1();
  const Expr& f2 = m.f2();
  return {simplify((f2 / f1) * differentiate(f1, Var::X2)),
          simplify((f1 / f2) * differentiate(f2, Var::X1))};
}

const FrameField& ConnectionTable::operator()(FrameIndex i, FrameIndex j) const {
  if (i == FrameIndex::E1) return j == FrameIndex::E1 ? e1_e1 : e1_e2;
  return j == FrameIndex::E1 ? e2_e1 : e2_e2;
}

ConnectionTable connection_table(const DiagonalMetric& m) {
  const auto [h12, h21] = channel_coefficients(m);
  const Expr zero(0.0);
  return {
      .e1_e1 = {zero, h12},
      .e1_e2 = {simplify(-h12), zero},
      .e2_e1 = {zero, simplify(-h21)},
      .e2_e2 = {h21, zero},
  };
}

FrameField lie_bracket(const DiagonalMetric& m) {
  // [f1 d1, f2 d2] = f1 (d1 f2) d2 - f2 (d2 f1) d1; a coordinate coefficient
  // c of d_i becomes c / f_i in the frame.
  const Expr& f1 = m.f1();
  const Expr& f2 = m.f2();
  const Expr coeff_d1 = -(f2 * differentiate(f1, Var::X2));
  const Expr coeff_d2 = f1 * differentiate(f2, Var::X1);
  return simplify(FrameField{coeff_d1 / f1, coeff_d2 / f2});
}

FrameField covariant_derivative(const DiagonalMetric& m, const FrameField& w, FrameIndex i) {
  const ConnectionTable table = connection_table(m);
  const FrameField& along_e1 = table(i, FrameIndex::E1);
  const FrameField& along_e2 = table(i, FrameIndex::E2);
  return simplify(FrameField{
      frame_derivative(m, w.e1, i) + w.e1 * along_e1.e1 + w.e2 * along_e2.e1,
      frame_derivative(m, w.e2, i) + w.e1 * along_e1.e2 + w.e2 * along_e2.e2,
  });
}

FrameField covariant_derivative(const DiagonalMetric& m, const FrameField& w, const FrameField& x) {
  const FrameField a = covariant_derivative(m, w, FrameIndex::E1);
  const FrameField b = covariant_derivative(m, w, FrameIndex::E2);
  return simplify(x.e1 * a + x.e2 * b);
}

CurvatureData ricci(const DiagonalMetric& m) {
  const auto [h12, h21] = channel_coefficients(m);
  const Expr rho = simplify(frame_derivative(m, h21, FrameIndex::E1) +
                            frame_derivative(m, h12, FrameIndex::E2) - pow(h21, Expr(2.0)) -
                            pow(h12, Expr(2.0)));
  return {h12, h21, rho, simplify(Expr(2.0) * rho)};
}

bool is_flat(const DiagonalMetric& m, const Domain& d, const SamplingConfig& cfg) {
  return is_probably_zero(ricci(m).rho, d, cfg.samples, cfg.seed, cfg.tolerance);
}

}  // namespace ricci2d
