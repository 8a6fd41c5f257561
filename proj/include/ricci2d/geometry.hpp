#pragma once

/// @file geometry.hpp
/// @brief Frame, connection and curvature of g = f1^-2 dx1^2 + f2^-2 dx2^2.
///
/// All vector quantities are expressed in the orthonormal frame
/// E1 = f1 d/dx1, E2 = f2 d/dx2. In these components g is the identity
/// pairing, so g(X, Y) = X.e1 * Y.e1 + X.e2 * Y.e2.

#include <vector>

#include "ricci2d/expr.hpp"
#include "ricci2d/numeric.hpp"

namespace ricci2d {

enum class FrameIndex { E1 = 1, E2 = 2 };

/// A vector field by its orthonormal-frame components V = e1 E1 + e2 E2.
struct FrameField {
  Expr e1;
  Expr e2;

  [[nodiscard]] const Expr& operator[](FrameIndex i) const { return i == FrameIndex::E1 ? e1 : e2; }
};

[[nodiscard]] FrameField operator+(const FrameField& a, const FrameField& b);
[[nodiscard]] FrameField operator-(const FrameField& a, const FrameField& b);
[[nodiscard]] FrameField operator*(const Expr& s, const FrameField& v);
[[nodiscard]] FrameField simplify(const FrameField& v);

class DiagonalMetric {
 public:
  DiagonalMetric(Expr f1, Expr f2) : f1_(std::move(f1)), f2_(std::move(f2)) {}

  [[nodiscard]] const Expr& f1() const noexcept { return f1_; }
  [[nodiscard]] const Expr& f2() const noexcept { return f2_; }
  [[nodiscard]] const Expr& factor(FrameIndex i) const noexcept {
    return i == FrameIndex::E1 ? f1_ : f2_;
  }
  /// Expressions that must stay away from zero wherever the metric is used.
  [[nodiscard]] std::vector<Expr> guards() const { return {f1_, f2_}; }

 private:
  Expr f1_;
  Expr f2_;
};

/// Throws SingularDomainError when f1 or f2 vanishes (or is undefined)
/// somewhere on d, as detected by find_zero.
void require_nowhere_zero(const DiagonalMetric& m, const Domain& d, const SamplingConfig& cfg);

/// E_i(u) = f_i du/dx^i
[[nodiscard]] Expr frame_derivative(const DiagonalMetric& m, const Expr& u, FrameIndex i);

struct ChannelCoefficients {
  Expr h12;  ///< (f2/f1) df1/dx2
  Expr h21;  ///< (f1/f2) df2/dx1
};

[[nodiscard]] ChannelCoefficients channel_coefficients(const DiagonalMetric& m);

/// nabla_{E_i} E_j in frame components, indexed as (i, j).
struct ConnectionTable {
  FrameField e1_e1;
  FrameField e1_e2;
  FrameField e2_e1;
  FrameField e2_e2;

  [[nodiscard]] const FrameField& operator()(FrameIndex i, FrameIndex j) const;
};

[[nodiscard]] ConnectionTable connection_table(const DiagonalMetric& m);

/// [E1, E2] computed from the coordinate expression of the two frame fields,
/// independently of the connection table.
[[nodiscard]] FrameField lie_bracket(const DiagonalMetric& m);

/// nabla_{E_i} W for a frame field W, assembled from the connection table.
[[nodiscard]] FrameField covariant_derivative(const DiagonalMetric& m, const FrameField& w,
                                              FrameIndex i);

/// nabla_X W for X given in frame components.
[[nodiscard]] FrameField covariant_derivative(const DiagonalMetric& m, const FrameField& w,
                                              const FrameField& x);

struct CurvatureData {
  Expr h12;
  Expr h21;
  Expr rho;  ///< Ric(E1,E1) = Ric(E2,E2); Ric(E1,E2) = 0
  Expr r;    ///< scalar curvature, 2 rho
};

[[nodiscard]] CurvatureData ricci(const DiagonalMetric& m);

[[nodiscard]] bool is_flat(const DiagonalMetric& m, const Domain& d, const SamplingConfig& cfg);

}  // namespace ricci2d
