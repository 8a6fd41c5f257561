#include "ricci2d/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ricci2d {

void SamplingConfig::validate() const {
  if (samples < 1) throw std::invalid_argument("sampling.samples must be at least 1");
  if (!(tolerance > 0.0)) throw std::invalid_argument("sampling.tolerance must be positive");
  if (!(fd_step > 0.0)) throw std::invalid_argument("sampling.fd_step must be positive");
  if (!(fd_tolerance > 0.0)) throw std::invalid_argument("sampling.fd_tolerance must be positive");
}

std::uint64_t SampleRng::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SampleRng::unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

bool passes_guards(std::span<const Expr> guards, const Point& p, double guard_min) {
  for (const auto& g : guards) {
    try {
      if (std::abs(evaluate(g, p)) < guard_min) return false;
    } catch (const DomainError&) {
      return false;
    }
  }
  return true;
}

std::vector<Point> sample_points(const Domain& d, const SamplingConfig& cfg,
                                 std::span<const Expr> guards) {
  d.validate();
  cfg.validate();
  SampleRng rng(cfg.seed);
  std::vector<Point> points;
  points.reserve(cfg.samples);
  const std::size_t max_draws = 100 * cfg.samples;
  for (std::size_t draw = 0; draw < max_draws && points.size() < cfg.samples; ++draw) {
    const double a = rng.uniform(d.x1.lo, d.x1.hi);
    const double b = rng.uniform(d.x2.lo, d.x2.hi);
    const Point p{a, b};
    if (passes_guards(guards, p, d.guard)) points.push_back(p);
  }
  if (2 * points.size() < cfg.samples) {
    throw SingularDomainError("domain too singular: only " + std::to_string(points.size()) +
                              " of " + std::to_string(cfg.samples) +
                              " sample points passed the guards after " +
                              std::to_string(max_draws) + " draws");
  }
  return points;
}

double fd_partial(const Expr& e, const Point& p, Var v, double h) {
  return (evaluate(e, p.shifted(v, h)) - evaluate(e, p.shifted(v, -h))) / (2.0 * h);
}

double fd_partial(const std::function<double(const Point&)>& f, const Point& p, Var v, double h) {
  return (f(p.shifted(v, h)) - f(p.shifted(v, -h))) / (2.0 * h);
}

namespace {

constexpr int kGridCells = 10;

std::vector<Point> grid_points(const Domain& d) {
  std::vector<Point> out;
  out.reserve((kGridCells + 1) * (kGridCells + 1));
  for (int i = 0; i <= kGridCells; ++i) {
    for (int j = 0; j <= kGridCells; ++j) {
      out.push_back({d.x1.lo + (d.x1.hi - d.x1.lo) * i / kGridCells,
                     d.x2.lo + (d.x2.hi - d.x2.lo) * j / kGridCells});
    }
  }
  return out;
}

std::vector<Point> raw_samples(const Domain& d, const SamplingConfig& cfg) {
  SampleRng rng(cfg.seed);
  std::vector<Point> out;
  out.reserve(cfg.samples);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const double a = rng.uniform(d.x1.lo, d.x1.hi);
    const double b = rng.uniform(d.x2.lo, d.x2.hi);
    out.push_back({a, b});
  }
  return out;
}

int sign_of(double x) { return (x > 0) - (x < 0); }

// A kink argument changing sign (or vanishing) across the stencil means the
// central difference is not measuring a derivative.
bool straddles_kink(std::span<const Expr> kinks, const Point& p, Var v, double h) {
  for (const auto& k : kinks) {
    const int s0 = sign_of(evaluate(k, p));
    if (s0 == 0 || sign_of(evaluate(k, p.shifted(v, h))) != s0 ||
        sign_of(evaluate(k, p.shifted(v, -h))) != s0) {
      return true;
    }
  }
  return false;
}

}  // namespace

FdValidation fd_validate(const Expr& e, const Domain& d, const SamplingConfig& cfg) {
  d.validate();
  cfg.validate();
  const Expr d1 = differentiate(e, Var::X1);
  const Expr d2 = differentiate(e, Var::X2);

  std::vector<Expr> guards = singular_factors(e);
  for (const Expr* de : {&d1, &d2}) {
    for (auto& g : singular_factors(*de)) {
      if (std::find(guards.begin(), guards.end(), g) == guards.end()) guards.push_back(g);
    }
  }
  const std::vector<Expr> kinks = kink_arguments(e);

  std::vector<Point> points = raw_samples(d, cfg);
  const auto grid = grid_points(d);
  points.insert(points.end(), grid.begin(), grid.end());

  FdValidation out;
  const double h = cfg.fd_step;
  for (const auto& p : points) {
    try {
      if (!passes_guards(guards, p, d.guard)) {
        ++out.skipped;
        continue;
      }
      double worst = 0.0;
      for (Var v : {Var::X1, Var::X2}) {
        if (straddles_kink(kinks, p, v, h)) throw DomainError("stencil", p, "straddles a kink");
        const double symbolic = evaluate(v == Var::X1 ? d1 : d2, p);
        const double numeric = fd_partial(e, p, v, h);
        worst = std::max(worst, std::abs(symbolic - numeric) / (1.0 + std::abs(symbolic)));
      }
      out.max_error = std::max(out.max_error, worst);
      ++out.points_checked;
    } catch (const DomainError&) {
      ++out.skipped;
    }
  }
  return out;
}

std::optional<Point> find_zero(const Expr& e, const Domain& d, const SamplingConfig& cfg) {
  d.validate();
  // Fine grid for sign changes; 201 nodes per axis puts the midpoint on the grid.
  constexpr int kCells = 200;
  std::vector<double> row(kCells + 1), prev(kCells + 1);
  for (int i = 0; i <= kCells; ++i) {
    const double a = d.x1.lo + (d.x1.hi - d.x1.lo) * i / kCells;
    for (int j = 0; j <= kCells; ++j) {
      const Point p{a, d.x2.lo + (d.x2.hi - d.x2.lo) * j / kCells};
      double v = 0.0;
      try {
        v = evaluate(e, p);
      } catch (const DomainError&) {
        return p;
      }
      if (std::abs(v) < d.guard) return p;
      if (j > 0 && sign_of(v) != sign_of(row[j - 1])) return p;
      if (i > 0 && sign_of(v) != sign_of(prev[j])) return p;
      row[j] = v;
    }
    std::swap(row, prev);
  }
  for (const auto& p : raw_samples(d, cfg)) {
    try {
      if (std::abs(evaluate(e, p)) < d.guard) return p;
    } catch (const DomainError&) {
      return p;
    }
  }
  return std::nullopt;
}

double max_abs(const Expr& e, std::span<const Point> points) {
  double m = 0.0;
  for (const auto& p : points) m = std::max(m, std::abs(evaluate(e, p)));
  return m;
}

Range value_range(const Expr& e, std::span<const Point> points) {
  if (points.empty()) return {};
  Range r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& p : points) {
    const double v = evaluate(e, p);
    r.min = std::min(r.min, v);
    r.max = std::max(r.max, v);
  }
  return r;
}

}  // namespace ricci2d
