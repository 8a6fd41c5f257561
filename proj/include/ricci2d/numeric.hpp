#pragma once

/// @file numeric.hpp
/// @brief Seeded sampling and the finite-difference oracle.
///
/// Everything that turns a symbolic claim ("this expression is identically
/// zero", "this is the derivative of that") into a numerical verdict goes
/// through here. Point sets depend only on the Domain, the SamplingConfig and
/// the guard list, so two runs with the same inputs see the same points.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ricci2d/expr.hpp"

namespace ricci2d {

struct SamplingConfig {
  std::size_t samples = 200;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  double fd_step = 1e-5;
  double fd_tolerance = 1e-5;

  void validate() const;
};

/// Too few sample points survived the guards.
class SingularDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic 64-bit generator (splitmix64). Used instead of the standard
/// distributions, whose output is not specified across library versions.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept;
  /// Uniform in [0, 1).
  double unit() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * unit(); }

 private:
  std::uint64_t state_;
};

/// True when every guard evaluates at p with magnitude >= guard_min.
[[nodiscard]] bool passes_guards(std::span<const Expr> guards, const Point& p, double guard_min);

/// Seeded uniform points in d at which every guard expression has
/// |g(p)| >= d.guard. Draws at most 100 * samples candidates; returns the
/// accepted points (up to cfg.samples) and throws SingularDomainError when
/// fewer than half of cfg.samples were accepted.
[[nodiscard]] std::vector<Point> sample_points(const Domain& d, const SamplingConfig& cfg,
                                               std::span<const Expr> guards);

/// Central difference (f(p + h e_v) - f(p - h e_v)) / 2h.
[[nodiscard]] double fd_partial(const Expr& e, const Point& p, Var v, double h);
[[nodiscard]] double fd_partial(const std::function<double(const Point&)>& f, const Point& p,
                                Var v, double h);

struct FdValidation {
  /// max over checked points and both variables of |symbolic - fd| / (1 + |symbolic|)
  double max_error = 0.0;
  std::size_t points_checked = 0;
  /// Points where the symbolic derivative is undefined, a denominator is below
  /// the guard, or the stencil straddles a kink of abs/sign.
  std::size_t skipped = 0;
};

/// Compares differentiate(e, v) with fd_partial at cfg.samples seeded points
/// plus an 11x11 grid over d.
[[nodiscard]] FdValidation fd_validate(const Expr& e, const Domain& d, const SamplingConfig& cfg);

/// Looks for evidence that e vanishes somewhere in d: a grid or sample point
/// with |e| < d.guard, a point where e is undefined, or a sign change between
/// neighbouring grid points. Returns the witness point.
[[nodiscard]] std::optional<Point> find_zero(const Expr& e, const Domain& d,
                                             const SamplingConfig& cfg);

/// Largest |e(p)| over the given points.
[[nodiscard]] double max_abs(const Expr& e, std::span<const Point> points);

/// Smallest and largest e(p) over the given points.
struct Range {
  double min = 0.0;
  double max = 0.0;
};
[[nodiscard]] Range value_range(const Expr& e, std::span<const Point> points);

}  // namespace ricci2d
