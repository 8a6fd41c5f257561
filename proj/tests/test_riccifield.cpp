#include <gtest/gtest.h>

#include <cmath>

#include "ricci2d/riccifield.hpp"
#include "test_support.hpp"

namespace ricci2d {
namespace {

using testing::unit_square;

const SamplingConfig kCfg{};

DiagonalMetric metric(const char* f1, const char* f2) { return {parse(f1), parse(f2)}; }
FrameField field(const char* v1, const char* v2) { return {parse(v1), parse(v2)}; }

bool zero(const Expr& e) { return is_probably_zero(e, unit_square(), 200, 42); }

// The field of the exp example with metric (k1 e^{x1}, k2 e^{x1}), given in
// coordinates k1^2 e^{x1}[cos - sin], k2^2 e^{x1}[cos + sin] of (k1/k2) x2.
FrameField exp_example_field(double k1, double k2) {
  const DiagonalMetric m{Expr(k1) * apply(Func::Exp, x1()), Expr(k2) * apply(Func::Exp, x1())};
  const Expr t = Expr(k1 / k2) * x2();
  const Expr c = apply(Func::Cos, t);
  const Expr s = apply(Func::Sin, t);
  const Expr e = apply(Func::Exp, x1());
  return from_coordinates(m, Expr(k1 * k1) * e * (c - s), Expr(k2 * k2) * e * (c + s));
}

TEST(CovariantMatrix, Examples) {
  const CovariantMatrix flat = covariant_matrix(metric("2", "-3"), field("1", "1"));
  for (const auto& e : flat.entries()) EXPECT_EQ(e, Expr(0.0));

  const CovariantMatrix c = covariant_matrix(metric("cosh(x1)", "exp(x1)"), field("exp(-x1)", "0"));
  EXPECT_TRUE(zero(c.e11 + parse("cosh(x1)*exp(-x1)")));

  const CovariantMatrix z = covariant_matrix(metric("cosh(x1)*x2^2 + 1", "exp(x1*x2)"), field("0", "0"));
  for (const auto& e : z.entries()) EXPECT_TRUE(zero(e));
}

// The four entries recomputed with hand-written formulas and FD derivatives.
TEST(CovariantMatrix, MatchesIndependentRecomputation) {
  const DiagonalMetric m = metric("2 + sin(x1*x2)", "exp(0.3*x1 - 0.2*x2^2)");
  const FrameField v = field("x1*cos(x2)", "tanh(x1 + x2)");
  const CovariantMatrix cm = covariant_matrix(m, v);
  SampleRng rng(8);
  const double h = 1e-5;
  for (int k = 0; k < 50; ++k) {
    const Point p{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double f1 = evaluate(m.f1(), p);
    const double f2 = evaluate(m.f2(), p);
    const double h12 = f2 / f1 * fd_partial(m.f1(), p, Var::X2, h);
    const double h21 = f1 / f2 * fd_partial(m.f2(), p, Var::X1, h);
    const double v1 = evaluate(v.e1, p);
    const double v2 = evaluate(v.e2, p);
    const double e1v1 = f1 * fd_partial(v.e1, p, Var::X1, h);
    const double e1v2 = f1 * fd_partial(v.e2, p, Var::X1, h);
    const double e2v1 = f2 * fd_partial(v.e1, p, Var::X2, h);
    const double e2v2 = f2 * fd_partial(v.e2, p, Var::X2, h);
    EXPECT_NEAR(evaluate(cm.e11, p), e1v1 - h12 * v2, 1e-8);
    EXPECT_NEAR(evaluate(cm.e12, p), e1v2 + h12 * v1, 1e-8);
    EXPECT_NEAR(evaluate(cm.e21, p), e2v1 + h21 * v2, 1e-8);
    EXPECT_NEAR(evaluate(cm.e22, p), e2v2 - h21 * v1, 1e-8);
  }
}

TEST(ResidualSystem, WorkedExamplesVanish) {
  struct Case {
    const char* f1;
    const char* f2;
    const char* v1;
    const char* v2;
  };
  for (const Case& c : {Case{"exp(x1)", "exp(x2)", "1", "1"},
                        Case{"cosh(x1)", "exp(x1)", "exp(-x1)", "0"},
                        Case{"exp(x1)", "-1.7", "1", "1"},
                        Case{"exp(x1)", "exp(x2)", "1", "0"},
                        Case{"exp(x1)", "exp(x2)", "0", "1"}}) {
    for (const auto& r : residual_system(metric(c.f1, c.f2), field(c.v1, c.v2))) {
      EXPECT_TRUE(zero(r)) << c.f1 << ", " << c.f2 << ": " << to_string(r);
    }
  }
}

TEST(Verify, ConstantMetricExample) {
  const ResidualReport r = verify(metric("2", "3"), field("1", "1"), unit_square(), kCfg);
  EXPECT_TRUE(r.pass);
  for (double m : r.max_abs) EXPECT_EQ(m, 0.0);
  EXPECT_EQ(r.points_used, 200u);
  EXPECT_EQ(r.seed, 42u);
}

TEST(Verify, ExpExampleWithEqualConstantsPasses) {
  const DiagonalMetric m = metric("exp(x1)", "exp(x1)");
  const ResidualReport r = verify(m, exp_example_field(1, 1), unit_square(), kCfg);
  EXPECT_TRUE(r.pass);
  for (double v : r.max_abs) EXPECT_LE(v, 1e-9);
}

TEST(Verify, ExpExampleWithDistinctConstantsFails) {
  const DiagonalMetric m = metric("exp(x1)", "2*exp(x1)");
  const FrameField v = exp_example_field(1, 2);
  const ResidualReport r = verify(m, v, unit_square(), kCfg);
  EXPECT_FALSE(r.pass);
  EXPECT_GE(r.max_abs[3], 0.1);
  // Hand substitution: R4 = e^{x1}(cos + sin)(k1 k2 - k1^2), R2 = e^{x1}(cos - sin)(k1 k2 - k1^2).
  const auto res = residual_system(m, v);
  EXPECT_TRUE(zero(res[3] - parse("exp(x1)*(cos(0.5*x2) + sin(0.5*x2))")));
  EXPECT_TRUE(zero(res[1] - parse("exp(x1)*(cos(0.5*x2) - sin(0.5*x2))")));
  EXPECT_TRUE(zero(res[0]));
  EXPECT_TRUE(zero(res[2]));
}

TEST(Verify, ZeroFieldOnCurvedMetricFails) {
  const ResidualReport r = verify(metric("cosh(x1)", "exp(x1)"), field("0", "0"), unit_square(), kCfg);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.max_abs[0], 0.5);
}

TEST(Verify, SingularDomain) {
  EXPECT_THROW((void)verify(metric("1e-9*x1", "1"), field("0", "0"), unit_square(), kCfg),
               SingularDomainError);
}

TEST(Coordinates, Examples) {
  const DiagonalMetric m = metric("exp(x1)", "exp(x2)");
  const FrameField v = from_coordinates(m, parse("exp(x1)"), parse("exp(x2)"));
  EXPECT_TRUE(zero(v.e1 - Expr(1.0)));
  EXPECT_TRUE(zero(v.e2 - Expr(1.0)));
  const FrameField c = from_coordinates(metric("cosh(x1)", "exp(x1)"),
                                        parse("exp(-x1)*cosh(x1)"), Expr(0.0));
  EXPECT_TRUE(zero(c.e1 - parse("exp(-x1)")));
  EXPECT_TRUE(zero(c.e2));
  const FrameField back = to_coordinates(m, v);
  EXPECT_TRUE(zero(back.e1 - parse("exp(x1)")));
  EXPECT_TRUE(zero(back.e2 - parse("exp(x2)")));
  const FrameField z = from_coordinates(metric("2", "3"), Expr(0.0), Expr(0.0));
  EXPECT_TRUE(zero(z.e1));
  EXPECT_TRUE(zero(z.e2));
}

TEST(Divergence, Examples) {
  EXPECT_TRUE(zero(divergence(metric("2", "3"), field("1", "1"))));
  const Expr div = divergence(metric("cosh(x1)", "exp(x1)"), field("exp(-x1)", "0"));
  EXPECT_TRUE(zero(div - parse("2*(cosh(x1)*sinh(x1) - cosh(x1)^2)")));
}

TEST(Closedness, Examples) {
  EXPECT_TRUE(zero(closedness_defect(metric("cosh(x1)", "exp(x1)"), field("exp(-x1)", "0"))));
  EXPECT_TRUE(zero(closedness_defect(metric("2", "3"), field("x2", "0")) + Expr(3.0)));
  EXPECT_TRUE(zero(closedness_defect(metric("cosh(x1)", "exp(x1)"), field("0", "0"))));
}

TEST(Properties, AverageAndDifferenceOfFieldsOnAFlatMetric) {
  const DiagonalMetric m = metric("exp(x1)", "exp(x1)");
  const FrameField a{parse("cos(x2) - sin(x2)"), parse("cos(x2) + sin(x2)")};
  const FrameField b{parse("-0.5*sin(x2) + 2*cos(x2)"), parse("0.5*cos(x2) + 2*sin(x2)")};
  ASSERT_TRUE(verify(m, a, unit_square(), kCfg).pass);
  ASSERT_TRUE(verify(m, b, unit_square(), kCfg).pass);
  EXPECT_TRUE(verify(m, Expr(0.5) * (a + b), unit_square(), kCfg).pass);
  EXPECT_LE(parallel_defect(m, a - b, unit_square(), kCfg), 2e-9);
  EXPECT_GT(parallel_defect(m, FrameField{x1(), x2()}, unit_square(), kCfg), 0.1);
}

}  // namespace
}  // namespace ricci2d
