#include <gtest/gtest.h>

#include <cmath>

#include "ricci2d/geometry.hpp"
#include "test_support.hpp"

namespace ricci2d {
namespace {

using testing::random_smooth_tree;
using testing::unit_square;

const SamplingConfig kCfg{};

DiagonalMetric metric(const char* f1, const char* f2) { return {parse(f1), parse(f2)}; }

bool zero(const Expr& e, const Domain& d = unit_square()) {
  return is_probably_zero(e, d, 200, 42);
}

TEST(FrameDerivative, Examples) {
  const DiagonalMetric m = metric("3", "-2");
  EXPECT_EQ(frame_derivative(m, x2(), FrameIndex::E2), Expr(-2.0));
  EXPECT_EQ(frame_derivative(m, x2(), FrameIndex::E1), Expr(0.0));
  const DiagonalMetric cosh_m = metric("cosh(x1)", "exp(x1)");
  const Expr d = frame_derivative(cosh_m, parse("exp(-x1)"), FrameIndex::E1);
  EXPECT_TRUE(zero(d + parse("cosh(x1)*exp(-x1)")));
}

TEST(ChannelCoefficients, Examples) {
  const auto flat = channel_coefficients(metric("1.5", "-0.5"));
  EXPECT_EQ(flat.h12, Expr(0.0));
  EXPECT_EQ(flat.h21, Expr(0.0));

  const auto ex = channel_coefficients(metric("exp(x1)", "exp(x2)"));
  EXPECT_TRUE(zero(ex.h12));
  EXPECT_TRUE(zero(ex.h21));

  const auto c = channel_coefficients(metric("cosh(x1)", "exp(x1)"));
  EXPECT_TRUE(zero(c.h12));
  EXPECT_TRUE(zero(c.h21 - parse("cosh(x1)")));
}

TEST(Connection, ExampleTable) {
  const DiagonalMetric m = metric("cosh(x1)", "exp(x1)");
  const ConnectionTable t = connection_table(m);
  // h12 = 0, h21 = cosh(x1)
  EXPECT_TRUE(zero(t(FrameIndex::E2, FrameIndex::E2).e1 - parse("cosh(x1)")));
  EXPECT_TRUE(zero(t(FrameIndex::E2, FrameIndex::E1).e2 + parse("cosh(x1)")));
  EXPECT_TRUE(zero(t(FrameIndex::E1, FrameIndex::E1).e2));
  EXPECT_TRUE(zero(t(FrameIndex::E1, FrameIndex::E2).e1));
}

// Random metrics whose factors never vanish: exp(s*sin(tree)) and 2 + sin(tree).
DiagonalMetric random_metric(SampleRng& rng) {
  const auto factor = [&](int variant) {
    const Expr t = random_smooth_tree(rng, 3);
    if (variant == 0) return apply(Func::Exp, Expr(0.5) * apply(Func::Sin, t));
    return Expr(2.0) + apply(Func::Sin, t);
  };
  return {factor(static_cast<int>(rng.next() % 2)), factor(static_cast<int>(rng.next() % 2))};
}

TEST(Connection, MetricCompatibleAndTorsionFree) {
  SampleRng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const DiagonalMetric m = random_metric(rng);
    const ConnectionTable t = connection_table(m);
    for (FrameIndex i : {FrameIndex::E1, FrameIndex::E2}) {
      // E_i g(E_j, E_k) = 0 = g(nabla_i E_j, E_k) + g(E_j, nabla_i E_k)
      const FrameField a = t(i, FrameIndex::E1);
      const FrameField b = t(i, FrameIndex::E2);
      EXPECT_TRUE(zero(a.e1));
      EXPECT_TRUE(zero(b.e2));
      EXPECT_TRUE(zero(a.e2 + b.e1));
    }
    const FrameField torsion =
        t(FrameIndex::E1, FrameIndex::E2) - t(FrameIndex::E2, FrameIndex::E1) - lie_bracket(m);
    EXPECT_TRUE(zero(torsion.e1)) << to_string(m.f1()) << " | " << to_string(m.f2());
    EXPECT_TRUE(zero(torsion.e2));
  }
}

TEST(LieBracket, MatchesChannelCoefficients) {
  const DiagonalMetric m = metric("2 + sin(x2)", "exp(x1*x2)");
  const FrameField br = lie_bracket(m);
  const auto h = channel_coefficients(m);
  EXPECT_TRUE(zero(br.e1 + h.h12));
  EXPECT_TRUE(zero(br.e2 - h.h21));
}

TEST(Ricci, Examples) {
  EXPECT_EQ(ricci(metric("2", "3")).rho, Expr(0.0));
  EXPECT_TRUE(zero(ricci(metric("exp(x1)", "exp(x2)")).rho));

  const CurvatureData c = ricci(metric("cosh(x1)", "exp(x1)"));
  EXPECT_TRUE(zero(c.rho - parse("cosh(x1)*sinh(x1) - cosh(x1)^2")));
  EXPECT_TRUE(zero(c.r - Expr(2.0) * c.rho));

  for (double k1 : {1.0, -0.5, 2.0}) {
    for (double k2 : {1.0, 0.3}) {
      const DiagonalMetric m{Expr(k1) * apply(Func::Exp, x1()), Expr(k2) * apply(Func::Exp, x1())};
      EXPECT_TRUE(zero(ricci(m).rho)) << k1 << " " << k2;
      EXPECT_TRUE(is_flat(m, unit_square(), kCfg));
    }
  }
  EXPECT_FALSE(is_flat(metric("cosh(x1)", "exp(x1)"), unit_square(), kCfg));
}

// rho recomputed from f1, f2 by nested central differences only.
TEST(Ricci, MatchesFiniteDifferenceCurvature) {
  SampleRng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const DiagonalMetric m = random_metric(rng);
    const Expr rho = ricci(m).rho;
    for (int k = 0; k < 10; ++k) {
      const Point p{rng.uniform(-1, 1), rng.uniform(-1, 1)};
      const double symbolic = evaluate(rho, p);
      const double numeric = testing::rho_by_finite_differences(m.f1(), m.f2(), p);
      EXPECT_LE(std::abs(symbolic - numeric), 1e-4 * (1.0 + std::abs(symbolic)))
          << to_string(m.f1()) << " | " << to_string(m.f2());
    }
  }
}

TEST(Metric, NowhereZero) {
  EXPECT_NO_THROW(require_nowhere_zero(metric("cosh(x1)", "exp(x1)"), unit_square(), kCfg));
  EXPECT_THROW(require_nowhere_zero(metric("sin(x1)", "1"), unit_square(), kCfg),
               SingularDomainError);
  EXPECT_THROW(require_nowhere_zero(metric("1", "x2 + 0.5"), unit_square(), kCfg),
               SingularDomainError);
  const Domain right{{0.5, 2.0}, {-1.0, 1.0}, 1e-6};
  EXPECT_NO_THROW(require_nowhere_zero(metric("sinh(x1)", "exp(x1)"), right, kCfg));
}

TEST(CovariantDerivative, LinearInDirection) {
  const DiagonalMetric m = metric("cosh(x1)", "exp(x1)");
  const FrameField w{parse("x1*x2"), parse("sin(x2)")};
  const FrameField x{parse("2"), parse("x1")};
  const FrameField direct = covariant_derivative(m, w, x);
  const FrameField split = Expr(2.0) * covariant_derivative(m, w, FrameIndex::E1) +
                           x1() * covariant_derivative(m, w, FrameIndex::E2);
  EXPECT_TRUE(zero(direct.e1 - split.e1));
  EXPECT_TRUE(zero(direct.e2 - split.e2));
}

}  // namespace
}  // namespace ricci2d
