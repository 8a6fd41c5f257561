#pragma once

/// @file commands.hpp
/// @brief The tool's subcommands as library calls returning a JSON report.
///
/// Exit codes: 0 pass, 1 verification failure, 2 spec or parse error,
/// 3 singular domain, 4 family hypothesis violated.

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ricci2d/jobspec.hpp"

namespace ricci2d {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitSpecError = 2,
  kExitSingularDomain = 3,
  kExitHypothesis = 4,
};

enum class Command { Curvature, Verify, Construct, Oracle, Identities };

[[nodiscard]] std::optional<Command> command_from_name(std::string_view name);
[[nodiscard]] std::string_view command_name(Command c);

struct CommandOutcome {
  int exit_code = kExitPass;
  nlohmann::json report;
  /// construct only: the metric + field job it produced.
  std::optional<nlohmann::json> derived_spec;
};

[[nodiscard]] CommandOutcome cmd_curvature(const JobSpec& job);
[[nodiscard]] CommandOutcome cmd_verify(const JobSpec& job, bool identities);
[[nodiscard]] CommandOutcome cmd_construct(const JobSpec& job);
[[nodiscard]] CommandOutcome cmd_oracle(const JobSpec& job);

/// Dispatches and maps every library exception onto its exit code; the
/// report then carries "error" (and "position" for parse errors).
[[nodiscard]] CommandOutcome run_command(Command c, const JobSpec& job, bool identities = false);

/// Canonical text form of a report: two-space indented JSON plus newline.
[[nodiscard]] std::string render_report(const nlohmann::json& report);

/// CSV with columns x1,x2,rho[,R1,R2,R3,R4] on an n x n grid over the job's
/// domain; undefined values are written as nan.
[[nodiscard]] std::string sample_grid_csv(const JobSpec& job, int n = 21);

}  // namespace ricci2d
