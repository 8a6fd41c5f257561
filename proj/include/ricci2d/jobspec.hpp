#pragma once

/// @file jobspec.hpp
/// @brief JSON job files read by the command-line tool.
///
/// Layout (every key except "domain" and "sampling" is optional; missing
/// domain and sampling keys take their defaults):
///
///   {
///     "metric":    {"f1": "<expr>", "f2": "<expr>"},
///     "field":     {"frame": "orthonormal" | "coordinate", "V1": "<expr>", "V2": "<expr>"},
///     "potential": "<expr>",
///     "family":    {"kind": "branch1", "f2": "<expr>", "k": 1, "c": 1},
///     "domain":    {"x1": [-1, 1], "x2": [-1, 1], "guard": 1e-6},
///     "sampling":  {"samples": 200, "seed": 42, "tolerance": 1e-9,
///                   "fd_step": 1e-5, "fd_tolerance": 1e-5}
///   }
///
/// Family kinds and their keys:
///   constant_components: f1, f2, c1, c2
///   branch1:             f2, k, c
///   branch2:             f2, c, c1, c2
///   constant_metric:     k1, k2, c1, c2

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "ricci2d/families.hpp"
#include "ricci2d/geometry.hpp"
#include "ricci2d/numeric.hpp"

namespace ricci2d {

/// Malformed job file: wrong types, missing keys, conflicting sections.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MetricSpec {
  std::string f1;
  std::string f2;
};

enum class FieldFrame { Orthonormal, Coordinate };

struct FieldSpec {
  FieldFrame frame = FieldFrame::Orthonormal;
  std::string v1;
  std::string v2;
};

struct JobSpec {
  std::optional<MetricSpec> metric;
  std::optional<FieldSpec> field;
  std::optional<std::string> potential;
  std::optional<nlohmann::json> family;
  Domain domain;
  SamplingConfig sampling;
};

[[nodiscard]] JobSpec job_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json job_to_json(const JobSpec& job);
[[nodiscard]] JobSpec load_job(const std::string& path);

/// Parses "x1:lo,hi;x2:lo,hi" (either part may be omitted) into d.
void apply_domain_override(Domain& d, const std::string& text);

[[nodiscard]] DiagonalMetric metric_of(const JobSpec& job);
[[nodiscard]] FamilyParams family_of(const nlohmann::json& family);

}  // namespace ricci2d
