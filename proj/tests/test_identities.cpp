#include <gtest/gtest.h>

#include "ricci2d/identities.hpp"
#include "ricci2d/riccifield.hpp"
#include "test_support.hpp"

namespace ricci2d {
namespace {

using testing::unit_square;

const SamplingConfig kCfg{};

DiagonalMetric metric(const char* f1, const char* f2) { return {parse(f1), parse(f2)}; }
FrameField field(const char* v1, const char* v2) { return {parse(v1), parse(v2)}; }
bool zero(const Expr& e) { return is_probably_zero(e, unit_square(), 200, 42); }

const char* const kCoshPotential = "-log(1 + exp(-2*x1))";

TEST(RicVV, Examples) {
  const auto flat = check_ric_vv(metric("exp(x1)", "exp(x2)"), field("1", "1"), unit_square(), kCfg);
  EXPECT_TRUE(flat.holds);
  EXPECT_TRUE(flat.member);

  const auto c = check_ric_vv(metric("cosh(x1)", "exp(x1)"), field("exp(-x1)", "0"), unit_square(), kCfg);
  EXPECT_TRUE(c.holds);
  EXPECT_LE(c.max_abs, 1e-9);

  const auto broken = check_ric_vv(metric("cosh(x1)", "exp(x1)"), field("1", "0"), unit_square(), kCfg);
  EXPECT_FALSE(broken.member);
  EXPECT_FALSE(broken.holds);
  EXPECT_GT(broken.max_abs, 0.1);
}

TEST(ScalarDivergence, Examples) {
  EXPECT_TRUE(check_scalar_divergence(metric("2", "3"), field("1", "-1"), unit_square(), kCfg).holds);
  EXPECT_TRUE(check_scalar_divergence(metric("cosh(x1)", "exp(x1)"), field("exp(-x1)", "0"),
                                      unit_square(), kCfg)
                  .holds);
  const auto broken = check_scalar_divergence(metric("cosh(x1)", "exp(x1)"), field("1", "0"),
                                              unit_square(), kCfg);
  EXPECT_FALSE(broken.holds);
  EXPECT_GT(broken.max_abs, 0.1);
}

TEST(NormSymmetry, Examples) {
  const DiagonalMetric cosh_m = metric("cosh(x1)", "exp(x1)");
  const FrameField v = field("exp(-x1)", "0");
  EXPECT_TRUE(check_norm_symmetry(cosh_m, v, v, unit_square(), kCfg).holds);
  EXPECT_TRUE(check_norm_symmetry(metric("2", "3"), field("1", "0"), field("0", "1"), unit_square(), kCfg)
                  .holds);
  const DiagonalMetric m = metric("exp(x1)", "exp(x1)");
  const FrameField a = field("-sin(x2)", "cos(x2)");  // branch2 with (c1, c2) = (1, 0)
  const FrameField b = field("cos(x2)", "sin(x2)");   // (c1, c2) = (0, 1)
  const auto r = check_norm_symmetry(m, a, b, unit_square(), kCfg);
  EXPECT_TRUE(r.member);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(check_norm_symmetry(m, a, field("x1", "0"), unit_square(), kCfg).member);
}

TEST(CurvatureIdentity, Examples) {
  EXPECT_TRUE(check_curvature_identity(metric("exp(x1)", "exp(x1)"), field("-sin(x2)", "cos(x2)"),
                                       unit_square(), kCfg)
                  .holds);
  const auto c = check_curvature_identity(metric("cosh(x1)", "exp(x1)"), field("exp(-x1)", "0"),
                                          unit_square(), kCfg);
  EXPECT_TRUE(c.holds);
  EXPECT_LE(c.max_abs, 1e-9);
}

// On a surface R(X,Y)Z = K (g(Y,Z) X - g(X,Z) Y) with K = rho, so
// R(E1,E2)V = rho (V2, -V1). Arbitrary fields, not only Ricci fields.
TEST(CurvatureIdentity, CurvatureOperatorMatchesGaussCurvature) {
  const DiagonalMetric m = metric("cosh(x1)*(2 + sin(x2))", "exp(0.3*x1*x2)");
  const Expr rho = ricci(m).rho;
  for (const FrameField& v : {field("x1*x2", "sin(x1)"), field("1", "0"), field("exp(x2)", "x1^2")}) {
    const FrameField lhs = curvature_applied(m, v);
    EXPECT_TRUE(zero(lhs.e1 - rho * v.e2)) << to_string(v.e1);
    EXPECT_TRUE(zero(lhs.e2 + rho * v.e1)) << to_string(v.e1);
  }
}

TEST(Gradient, Examples) {
  const DiagonalMetric flat = metric("exp(x1)", "exp(x2)");
  const FrameField v = gradient_field(flat, PotentialFunction{parse("-exp(-x1) - exp(-x2)")});
  EXPECT_TRUE(zero(v.e1 - Expr(1.0)));
  EXPECT_TRUE(zero(v.e2 - Expr(1.0)));
  const FrameField zero_f = gradient_field(flat, PotentialFunction{parse("4")});
  EXPECT_EQ(zero_f.e1, Expr(0.0));
  EXPECT_EQ(zero_f.e2, Expr(0.0));
  const FrameField lin = gradient_field(metric("2", "3"), PotentialFunction{x1()});
  EXPECT_EQ(lin.e1, Expr(2.0));
  EXPECT_EQ(lin.e2, Expr(0.0));

  const DiagonalMetric cosh_m = metric("cosh(x1)", "exp(x1)");
  const FrameField g = gradient_field(cosh_m, PotentialFunction{parse(kCoshPotential)});
  EXPECT_TRUE(zero(g.e1 - parse("exp(-x1)")));
  EXPECT_TRUE(zero(g.e2));
}

TEST(Hessian, Examples) {
  const DiagonalMetric flat = metric("exp(x1)", "exp(x2)");
  const PotentialFunction p{parse("-exp(-x1) - exp(-x2)")};
  for (const auto& row : hessian(flat, p)) {
    for (const auto& e : row) EXPECT_TRUE(zero(e));
  }
  EXPECT_TRUE(zero(laplacian(flat, p)));
  EXPECT_TRUE(zero(laplacian(flat, PotentialFunction{parse("7")})));

  const DiagonalMetric cosh_m = metric("cosh(x1)", "exp(x1)");
  const PotentialFunction q{parse(kCoshPotential)};
  const FrameMatrix h = hessian(cosh_m, q);
  const Expr rho = ricci(cosh_m).rho;
  EXPECT_TRUE(zero(h[0][0] - rho));
  EXPECT_TRUE(zero(h[1][1] - rho));
  EXPECT_TRUE(zero(h[0][1]));
  EXPECT_TRUE(zero(h[1][0]));
  EXPECT_TRUE(zero(laplacian(cosh_m, q) - ricci(cosh_m).r));
}

// Hess(f)(E_i, E_j) against second differences of f along the frame.
TEST(Hessian, SymmetricAndMatchesFiniteDifferences) {
  const DiagonalMetric m = metric("2 + sin(x1 + x2)", "exp(0.5*x1 - 0.2*x2)");
  const PotentialFunction p{parse("x1^2*x2 + cos(x2)")};
  const FrameMatrix h = hessian(m, p);
  EXPECT_TRUE(zero(h[0][1] - h[1][0]));
  // Hess(E1,E1) = E1(E1 f) - (nabla_{E1}E1) f, nabla_{E1}E1 = h12 E2.
  SampleRng rng(1);
  const auto h12 = channel_coefficients(m).h12;
  for (int k = 0; k < 20; ++k) {
    const Point q{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const auto e1f = [&](const Point& r) { return evaluate(m.f1(), r) * fd_partial(p.f, r, Var::X1, 1e-5); };
    const double e1e1f = evaluate(m.f1(), q) * fd_partial(e1f, q, Var::X1, 1e-4);
    const double e2f = evaluate(m.f2(), q) * fd_partial(p.f, q, Var::X2, 1e-5);
    EXPECT_NEAR(evaluate(h[0][0], q), e1e1f - evaluate(h12, q) * e2f, 1e-5);
  }
}

TEST(Soliton, Examples) {
  const auto flat = check_steady_soliton(metric("exp(x1)", "exp(x2)"),
                                         PotentialFunction{parse("-exp(-x1) - exp(-x2)")}, unit_square(), kCfg);
  EXPECT_TRUE(flat.holds);
  EXPECT_TRUE(check_laplacian(metric("exp(x1)", "exp(x2)"), PotentialFunction{parse("-exp(-x1) - exp(-x2)")},
                              unit_square(), kCfg)
                  .holds);

  const DiagonalMetric cosh_m = metric("cosh(x1)", "exp(x1)");
  EXPECT_TRUE(check_steady_soliton(cosh_m, PotentialFunction{parse(kCoshPotential)}, unit_square(), kCfg).holds);
  EXPECT_TRUE(check_laplacian(cosh_m, PotentialFunction{parse(kCoshPotential)}, unit_square(), kCfg).holds);

  const auto bad = check_steady_soliton(cosh_m, PotentialFunction{parse("x1*x2")}, unit_square(), kCfg);
  EXPECT_FALSE(bad.holds);
  EXPECT_FALSE(bad.member);
  EXPECT_GT(bad.max_abs, 0.1);
}

}  // namespace
}  // namespace ricci2d
