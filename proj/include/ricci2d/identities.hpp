#pragma once

/// @file identities.hpp
/// @brief Consequences of nabla V = Q, checked on verified fields, and the
/// gradient (steady soliton) case.
///
/// Every check first runs verify on its input. A field that is not a Ricci
/// field is reported with member = false and holds = false; the identity
/// defect is still measured so callers can see how far off it is.

#include <array>

#include "ricci2d/geometry.hpp"
#include "ricci2d/numeric.hpp"

namespace ricci2d {

struct IdentityCheck {
  bool holds = false;
  bool member = false;   ///< the input passed verify at cfg.tolerance
  double max_abs = 0.0;  ///< sampled defect of the identity
};

/// Ric(V, V) = 1/2 V(|V|^2)
[[nodiscard]] IdentityCheck check_ric_vv(const DiagonalMetric& m, const FrameField& v,
                                         const Domain& d, const SamplingConfig& cfg);

/// r = div V
[[nodiscard]] IdentityCheck check_scalar_divergence(const DiagonalMetric& m, const FrameField& v,
                                                    const Domain& d, const SamplingConfig& cfg);

/// V1(|V2|^2) = V2(|V1|^2); member requires both fields to verify.
[[nodiscard]] IdentityCheck check_norm_symmetry(const DiagonalMetric& m, const FrameField& v1,
                                                const FrameField& v2, const Domain& d,
                                                const SamplingConfig& cfg);

/// R(E1,E2)V = (nabla_{E1} Q) E2 - (nabla_{E2} Q) E1, both frame components.
[[nodiscard]] IdentityCheck check_curvature_identity(const DiagonalMetric& m, const FrameField& v,
                                                     const Domain& d, const SamplingConfig& cfg);

/// R(E1,E2)V from second covariant derivatives.
[[nodiscard]] FrameField curvature_applied(const DiagonalMetric& m, const FrameField& v);

/// The scalar potential f of a gradient field V = grad f.
struct PotentialFunction {
  Expr f;
};

[[nodiscard]] FrameField gradient_field(const DiagonalMetric& m, const PotentialFunction& p);

/// Hess(f)(E_i, E_j) = E_i(E_j f) - (nabla_{E_i} E_j) f, indexed [i-1][j-1].
using FrameMatrix = std::array<std::array<Expr, 2>, 2>;
[[nodiscard]] FrameMatrix hessian(const DiagonalMetric& m, const PotentialFunction& p);

[[nodiscard]] Expr laplacian(const DiagonalMetric& m, const PotentialFunction& p);

/// 1/2 L_{grad(-f)} g + Ric = 0, checked in the equivalent form Hess(f) = Ric.
/// member requires gradient_field(m, p) to verify.
[[nodiscard]] IdentityCheck check_steady_soliton(const DiagonalMetric& m,
                                                 const PotentialFunction& p, const Domain& d,
                                                 const SamplingConfig& cfg);

/// Delta f = r; member requires gradient_field(m, p) to verify.
[[nodiscard]] IdentityCheck check_laplacian(const DiagonalMetric& m, const PotentialFunction& p,
                                            const Domain& d, const SamplingConfig& cfg);

}  // namespace ricci2d
