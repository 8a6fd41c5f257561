#include <cmath>

#include "ricci2d/expr.hpp"
#include "ricci2d/numeric.hpp"

namespace ricci2d {

bool is_probably_zero(const Expr& e, const Domain& d, std::size_t samples, std::uint64_t seed,
                      double tol) {
  SamplingConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.tolerance = tol;
  const auto guards = singular_factors(e);
  for (const auto& p : sample_points(d, cfg, guards)) {
    const double value = evaluate(e, p);
    if (std::abs(value) > tol * (1.0 + magnitude_scale(e, p))) return false;
  }
  return true;
}

}  // namespace ricci2d
