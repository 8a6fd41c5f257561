#pragma once

/// @file riccifield.hpp
/// @brief Sampled decision of whether a frame field V satisfies nabla V = Q.
///
/// With Q = rho * Id in the orthonormal frame, nabla V = Q is the four scalar
/// equations
///
///   R1 = g(nabla_{E1} V, E1) - rho = 0      R3 = g(nabla_{E1} V, E2) = 0
///   R2 = g(nabla_{E2} V, E2) - rho = 0      R4 = g(nabla_{E2} V, E1) = 0
///
/// The verdict is taken on sampled maxima of |R_k|, never on the symbolic
/// shape of the residuals.

#include <array>
#include <cstdint>

#include "ricci2d/geometry.hpp"
#include "ricci2d/numeric.hpp"

namespace ricci2d {

/// Entries g(nabla_{E_i} V, E_j).
struct CovariantMatrix {
  Expr e11;
  Expr e12;
  Expr e21;
  Expr e22;

  [[nodiscard]] std::array<Expr, 4> entries() const { return {e11, e22, e12, e21}; }
};

[[nodiscard]] CovariantMatrix covariant_matrix(const DiagonalMetric& m, const FrameField& v);

/// {R1, R2, R3, R4} as documented above.
[[nodiscard]] std::array<Expr, 4> residual_system(const DiagonalMetric& m, const FrameField& v);

struct ResidualReport {
  std::array<Expr, 4> residuals;
  std::array<double, 4> max_abs{};
  bool pass = false;
  std::size_t points_used = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
};

/// Samples the residuals at cfg.samples seeded points of d, rejecting points
/// where f1, f2 or any residual denominator is below d.guard.
[[nodiscard]] ResidualReport verify(const DiagonalMetric& m, const FrameField& v, const Domain& d,
                                    const SamplingConfig& cfg);

/// Converts a coordinate field A d/dx1 + B d/dx2 to frame components.
[[nodiscard]] FrameField from_coordinates(const DiagonalMetric& m, const Expr& a, const Expr& b);

/// Inverse of from_coordinates: coordinate components (A, B).
[[nodiscard]] FrameField to_coordinates(const DiagonalMetric& m, const FrameField& v);

/// Trace of nabla V.
[[nodiscard]] Expr divergence(const DiagonalMetric& m, const FrameField& v);

/// (d eta)(E1, E2) for the metric dual eta of V.
[[nodiscard]] Expr closedness_defect(const DiagonalMetric& m, const FrameField& v);

/// Largest |entry| of covariant_matrix(m, v) over the sample points; zero
/// for parallel fields.
[[nodiscard]] double parallel_defect(const DiagonalMetric& m, const FrameField& v,
                                     const Domain& d, const SamplingConfig& cfg);

}  // namespace ricci2d
