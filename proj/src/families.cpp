#include "ricci2d/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ricci2d {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string describe(const Point& p) {
  return "(" + std::to_string(p.x1) + ", " + std::to_string(p.x2) + ")";
}

void require_nonzero(double value, const char* name) {
  if (value == 0.0 || !std::isfinite(value)) {
    throw HypothesisError(std::string(name) + " must be a nonzero real number");
  }
}

void require_independent_of(const Expr& e, Var v, const std::string& name, const Domain& d,
                            const SamplingConfig& cfg) {
  if (!e.depends_on(v)) return;
  const Expr de = differentiate(e, v);
  if (!is_probably_zero(de, d, cfg.samples, cfg.seed, cfg.tolerance)) {
    throw HypothesisError(name + " must not depend on " + std::string(variable_name(v)));
  }
}

void require_nowhere_zero(const Expr& e, const std::string& name, const Domain& d,
                          const SamplingConfig& cfg) {
  if (auto p = find_zero(e, d, cfg)) {
    throw HypothesisError(name + " = " + to_string(e) + " vanishes on the domain near " +
                          describe(*p));
  }
}

Expr d1(const Expr& e) { return differentiate(e, Var::X1); }

// Shared hypotheses of both x1-only branches.
Expr checked_f2_derivative(const Expr& f2, const Domain& d, const SamplingConfig& cfg) {
  require_independent_of(f2, Var::X2, "f2", d, cfg);
  require_nowhere_zero(f2, "f2", d, cfg);
  const Expr df2 = d1(f2);
  require_nowhere_zero(df2, "f2'", d, cfg);
  return df2;
}

FamilyMember build(const ConstantComponents& p, const Domain& d, const SamplingConfig& cfg) {
  require_independent_of(p.f1, Var::X2, "f1", d, cfg);
  require_independent_of(p.f2, Var::X1, "f2", d, cfg);
  require_nowhere_zero(p.f1, "f1", d, cfg);
  require_nowhere_zero(p.f2, "f2", d, cfg);
  return {DiagonalMetric(p.f1, p.f2), FrameField{Expr(p.c1), Expr(p.c2)}, "constant_components",
          false};
}

FamilyMember build(const Branch1& p, const Domain& d, const SamplingConfig& cfg) {
  require_nonzero(p.c, "c");
  const Expr df2 = checked_f2_derivative(p.f2, d, cfg);
  const Expr f1 = simplify((Expr(p.k) * pow(p.f2, Expr(2.0)) + Expr(p.c)) / (Expr(2.0) * df2));
  require_nowhere_zero(f1, "induced f1", d, cfg);
  return {DiagonalMetric(f1, p.f2), FrameField{simplify(Expr(p.c) / p.f2), Expr(0.0)}, "branch1",
          p.k == 0.0};
}

FamilyMember build(const Branch2& p, const Domain& d, const SamplingConfig& cfg) {
  require_nonzero(p.c, "c");
  const Expr df2 = checked_f2_derivative(p.f2, d, cfg);
  const Expr f1 = simplify(Expr(p.c) * pow(p.f2, Expr(2.0)) / df2);
  require_nowhere_zero(f1, "induced f1", d, cfg);
  // sign(c) and |c| are resolved to constants here, never left symbolic.
  const double sign_c = p.c > 0 ? 1.0 : -1.0;
  const Expr angle = Expr(std::abs(p.c)) * x2();
  const Expr cos_t = apply(Func::Cos, angle);
  const Expr sin_t = apply(Func::Sin, angle);
  FrameField v{Expr(sign_c) * (Expr(p.c2) * cos_t - Expr(p.c1) * sin_t),
               Expr(p.c1) * cos_t + Expr(p.c2) * sin_t};
  return {DiagonalMetric(f1, p.f2), simplify(v), "branch2", false};
}

FamilyMember build(const ConstantMetric& p, const Domain&, const SamplingConfig&) {
  require_nonzero(p.k1, "k1");
  require_nonzero(p.k2, "k2");
  return {DiagonalMetric(Expr(p.k1), Expr(p.k2)), FrameField{Expr(p.c1), Expr(p.c2)},
          "constant_metric", false};
}

}  // namespace

std::string family_name(const FamilyParams& p) {
  return std::visit(overloaded{
                        [](const ConstantComponents&) { return std::string("constant_components"); },
                        [](const Branch1&) { return std::string("branch1"); },
                        [](const Branch2&) { return std::string("branch2"); },
                        [](const ConstantMetric&) { return std::string("constant_metric"); },
                    },
                    p);
}

FamilyMember construct(const FamilyParams& p, const Domain& d, const SamplingConfig& cfg) {
  d.validate();
  cfg.validate();
  return std::visit([&](const auto& params) { return build(params, d, cfg); }, p);
}

DiagonalMetric remark_metric(RemarkFamily kind, double k, double a, double c, const Domain& d,
                             const SamplingConfig& cfg) {
  require_nonzero(k, "k");
  require_nonzero(a, "a");
  require_nonzero(c, "c");
  const Expr ax = Expr(a) * x1();
  const Expr f2 = simplify(Expr(k) * apply(Func::Exp, ax));
  Expr f1;
  switch (kind) {
    case RemarkFamily::Cosh: f1 = simplify(Expr(-(c / (k * a))) * apply(Func::Cosh, ax)); break;
    case RemarkFamily::Sinh: f1 = simplify(Expr(c / (k * a)) * apply(Func::Sinh, ax)); break;
    case RemarkFamily::Exp: f1 = simplify(Expr(c * k / a) * apply(Func::Exp, ax)); break;
  }
  require_nowhere_zero(f1, "f1", d, cfg);
  return DiagonalMetric(f1, f2);
}

Expr condition_expression(Condition kind, const DiagonalMetric& m) {
  const Expr& f1 = m.f1();
  const Expr& f2 = m.f2();
  const Expr df2 = d1(f2);
  switch (kind) {
    case Condition::Branch1:
      return simplify(d1(f1) * f2 - Expr(2.0) * f1 * df2 + f1 * f2 * d1(df2) / df2);
    case Condition::Branch2: return simplify(f1 * df2 / pow(f2, Expr(2.0)));
  }
  return Expr(0.0);
}

Admissibility admissibility(Condition kind, const DiagonalMetric& m, const Domain& d,
                            const SamplingConfig& cfg) {
  d.validate();
  cfg.validate();
  require_independent_of(m.f1(), Var::X2, "f1", d, cfg);
  require_independent_of(m.f2(), Var::X2, "f2", d, cfg);
  const Expr df2 = d1(m.f2());
  require_nowhere_zero(df2, "f2'", d, cfg);

  const Expr cond = condition_expression(kind, m);
  std::vector<Expr> guards = m.guards();
  guards.push_back(df2);
  for (auto& g : singular_factors(cond)) guards.push_back(g);
  const auto points = sample_points(d, cfg, guards);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  for (const auto& p : points) {
    const double v = evaluate(cond, p);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  Admissibility out;
  out.value = sum / static_cast<double>(points.size());
  out.spread = hi - lo;
  out.constant = out.spread <= cfg.tolerance * (1.0 + std::abs(out.value)) &&
                 std::abs(out.value) > cfg.tolerance;
  return out;
}

Expr log_derivative_defect(const Expr& f1) {
  const Expr log_d = simplify(differentiate(f1, Var::X2) / f1);
  return simplify(differentiate(log_d, Var::X2) - pow(log_d, Expr(2.0)));
}

}  // namespace ricci2d
