#pragma once

/// @file families.hpp
/// @brief Closed-form metric/field pairs that solve nabla V = Q.
///
/// Each constructor checks the hypotheses of its family on the working domain
/// (dependence on a single variable, nowhere-vanishing factors and
/// derivatives) and throws HypothesisError naming the first one that fails.

#include <stdexcept>
#include <string>
#include <variant>

#include "ricci2d/geometry.hpp"
#include "ricci2d/numeric.hpp"

namespace ricci2d {

class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f1 = f1(x1), f2 = f2(x2): the solutions are exactly the constant frame fields.
struct ConstantComponents {
  Expr f1;
  Expr f2;
  double c1 = 0.0;
  double c2 = 0.0;
};

/// f1, f2 functions of x1 with f2' != 0, field (c/f2, 0) and
/// f1 = (k f2^2 + c) / (2 f2'). k = 0 is accepted as the degenerate
/// f1 = c / (2 f2') solution and flagged as proof_only_case.
struct Branch1 {
  Expr f2;
  double k = 1.0;
  double c = 1.0;
};

/// f1 = c f2^2 / f2' (a flat metric) with the rotating field
/// V1 = sign(c)[c2 cos(|c| x2) - c1 sin(|c| x2)], V2 = c1 cos(|c| x2) + c2 sin(|c| x2).
struct Branch2 {
  Expr f2;
  double c = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

/// Constant metric (k1, k2) with a constant field.
struct ConstantMetric {
  double k1 = 1.0;
  double k2 = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

using FamilyParams = std::variant<ConstantComponents, Branch1, Branch2, ConstantMetric>;

[[nodiscard]] std::string family_name(const FamilyParams& p);

struct FamilyMember {
  DiagonalMetric metric;
  FrameField field;
  std::string family;
  bool proof_only_case = false;
};

[[nodiscard]] FamilyMember construct(const FamilyParams& p, const Domain& d,
                                     const SamplingConfig& cfg);

enum class RemarkFamily { Cosh, Sinh, Exp };

/// Cosh: f1 = -(c/(k a)) cosh(a x1); Sinh: f1 = (c/(k a)) sinh(a x1);
/// Exp: f1 = (c k / a) e^{a x1}. In every case f2 = k e^{a x1}.
[[nodiscard]] DiagonalMetric remark_metric(RemarkFamily kind, double k, double a, double c,
                                           const Domain& d, const SamplingConfig& cfg);

enum class Condition {
  /// f1' f2 - 2 f1 f2' + f1 f2 f2'' / f2'
  Branch1,
  /// f1 f2' / f2^2
  Branch2,
};

[[nodiscard]] Expr condition_expression(Condition kind, const DiagonalMetric& m);

struct Admissibility {
  bool constant = false;  ///< sample-constant and nonzero
  double value = 0.0;     ///< mean over the sample points
  double spread = 0.0;    ///< max - min over the sample points
};

/// Requires f1 and f2 to depend on x1 only and f2' to be nowhere zero on d.
[[nodiscard]] Admissibility admissibility(Condition kind, const DiagonalMetric& m,
                                          const Domain& d, const SamplingConfig& cfg);

/// For f2 constant and f1 = f1(x2), rho / f2^2 = (f1'/f1)' - (f1'/f1)^2
/// with ' = d/dx2. Returned symbolically so callers can sample it.
[[nodiscard]] Expr log_derivative_defect(const Expr& f1);

}  // namespace ricci2d
