#include "ricci2d/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ricci2d/identities.hpp"
#include "ricci2d/riccifield.hpp"

namespace ricci2d {

using nlohmann::json;

namespace {

json range_json(const Range& r) { return json::array({r.min, r.max}); }

json base_report(Command c, const JobSpec& job) {
  return {
      {"version", std::string(kVersion)},
      {"command", std::string(command_name(c))},
      {"seed", job.sampling.seed},
      {"spec", job_to_json(job)},
  };
}

std::vector<Expr> with_singular_factors(std::vector<Expr> guards, std::initializer_list<Expr> exprs) {
  for (const auto& e : exprs) {
    for (auto& g : singular_factors(e)) {
      if (std::find(guards.begin(), guards.end(), g) == guards.end()) guards.push_back(g);
    }
  }
  return guards;
}

// Adds the curvature summary, rho_range and flat keys.
void add_curvature(json& report, const DiagonalMetric& m, const CurvatureData& cd,
                   const JobSpec& job) {
  const auto guards = with_singular_factors(m.guards(), {cd.h12, cd.h21, cd.rho});
  const auto points = sample_points(job.domain, job.sampling, guards);
  const Range rho_range = value_range(cd.rho, points);
  report["curvature"] = {
      {"h12", to_string(cd.h12)},
      {"h21", to_string(cd.h21)},
      {"rho", to_string(cd.rho)},
      {"r", to_string(cd.r)},
      {"ranges",
       {{"h12", range_json(value_range(cd.h12, points))},
        {"h21", range_json(value_range(cd.h21, points))},
        {"rho", range_json(rho_range)},
        {"r", range_json(value_range(cd.r, points))}}},
  };
  report["rho_range"] = range_json(rho_range);
  report["flat"] = is_flat(m, job.domain, job.sampling);
}

FrameField field_of(const JobSpec& job, const DiagonalMetric& m) {
  if (job.field) {
    const Expr a = parse(job.field->v1);
    const Expr b = parse(job.field->v2);
    if (job.field->frame == FieldFrame::Coordinate) return from_coordinates(m, a, b);
    return {a, b};
  }
  if (job.potential) return gradient_field(m, PotentialFunction{parse(*job.potential)});
  throw SpecError("spec needs a field or a potential");
}

json check_json(const IdentityCheck& c) {
  return {{"holds", c.holds}, {"member", c.member}, {"max_abs", c.max_abs}};
}

}  // namespace

std::optional<Command> command_from_name(std::string_view name) {
  if (name == "curvature") return Command::Curvature;
  if (name == "verify") return Command::Verify;
  if (name == "construct") return Command::Construct;
  if (name == "oracle") return Command::Oracle;
  if (name == "identities") return Command::Identities;
  return std::nullopt;
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Curvature: return "curvature";
    case Command::Verify: return "verify";
    case Command::Construct: return "construct";
    case Command::Oracle: return "oracle";
    case Command::Identities: return "identities";
  }
  return "?";
}

CommandOutcome cmd_curvature(const JobSpec& job) {
  const DiagonalMetric m = metric_of(job);
  require_nowhere_zero(m, job.domain, job.sampling);
  CommandOutcome out;
  out.report = base_report(Command::Curvature, job);
  add_curvature(out.report, m, ricci(m), job);
  out.report["verdict"] = "pass";
  return out;
}

CommandOutcome cmd_verify(const JobSpec& job, bool identities) {
  const int sections = int(job.field.has_value()) + int(job.potential.has_value()) +
                       int(job.family.has_value());
  if (sections != 1 || job.family) {
    throw SpecError("verify needs exactly one of \"field\" or \"potential\" (and no \"family\")");
  }
  const DiagonalMetric m = metric_of(job);
  require_nowhere_zero(m, job.domain, job.sampling);
  const FrameField v = field_of(job, m);
  const ResidualReport rr = verify(m, v, job.domain, job.sampling);

  CommandOutcome out;
  out.report = base_report(identities ? Command::Identities : Command::Verify, job);
  add_curvature(out.report, m, ricci(m), job);
  out.report["field"] = {{"V1", to_string(v.e1)}, {"V2", to_string(v.e2)}};
  json residuals = json::array();
  for (const auto& r : rr.residuals) residuals.push_back(to_string(r));
  out.report["residuals"] = residuals;
  out.report["residual_max"] = rr.max_abs;
  out.report["points_used"] = rr.points_used;
  out.report["tolerance"] = rr.tolerance;
  bool ok = rr.pass;

  if (identities) {
    const Domain& d = job.domain;
    const SamplingConfig& cfg = job.sampling;
    json checks = {
        {"ric_vv", check_json(check_ric_vv(m, v, d, cfg))},
        {"scalar_divergence", check_json(check_scalar_divergence(m, v, d, cfg))},
        {"curvature_identity", check_json(check_curvature_identity(m, v, d, cfg))},
    };
    if (job.potential) {
      const PotentialFunction p{parse(*job.potential)};
      checks["steady_soliton"] = check_json(check_steady_soliton(m, p, d, cfg));
      checks["laplacian"] = check_json(check_laplacian(m, p, d, cfg));
    }
    for (const auto& [name, c] : checks.items()) ok = ok && c.at("holds").get<bool>();
    out.report["identities"] = checks;
  }
  out.report["verdict"] = ok ? "pass" : "fail";
  out.exit_code = ok ? kExitPass : kExitFail;
  return out;
}

CommandOutcome cmd_construct(const JobSpec& job) {
  if (!job.family) throw SpecError("construct needs a \"family\" section");
  if (job.metric || job.field || job.potential) {
    throw SpecError("construct takes only \"family\", \"domain\" and \"sampling\"");
  }
  const FamilyMember member = construct(family_of(*job.family), job.domain, job.sampling);

  JobSpec derived;
  derived.metric = MetricSpec{to_string(member.metric.f1()), to_string(member.metric.f2())};
  derived.field = FieldSpec{FieldFrame::Orthonormal, to_string(member.field.e1),
                            to_string(member.field.e2)};
  derived.domain = job.domain;
  derived.sampling = job.sampling;

  // Verify the emitted text, not the in-memory trees, so the file is what was checked.
  CommandOutcome out = cmd_verify(derived, false);
  json report = base_report(Command::Construct, job);
  for (const auto& [key, value] : out.report.items()) {
    if (!report.contains(key)) report[key] = value;
  }
  report["family"] = member.family;
  report["proof_only_case"] = member.proof_only_case;
  out.derived_spec = job_to_json(derived);
  report["derived_spec"] = *out.derived_spec;
  out.report = std::move(report);
  return out;
}

CommandOutcome cmd_oracle(const JobSpec& job) {
  const DiagonalMetric m = metric_of(job);
  require_nowhere_zero(m, job.domain, job.sampling);
  const CurvatureData cd = ricci(m);
  std::vector<std::pair<std::string, Expr>> targets = {
      {"h12", cd.h12}, {"h21", cd.h21}, {"rho", cd.rho}};
  if (job.field || job.potential) {
    const auto residuals = residual_system(m, field_of(job, m));
    for (std::size_t k = 0; k < residuals.size(); ++k) {
      targets.emplace_back("R" + std::to_string(k + 1), residuals[k]);
    }
  }
  CommandOutcome out;
  out.report = base_report(Command::Oracle, job);
  json per_expr = json::object();
  double worst = 0.0;
  std::size_t skipped = 0;
  for (const auto& [name, e] : targets) {
    const FdValidation v = fd_validate(e, job.domain, job.sampling);
    per_expr[name] = {{"max_error", v.max_error},
                      {"points_checked", v.points_checked},
                      {"skipped", v.skipped}};
    worst = std::max(worst, v.max_error);
    skipped += v.skipped;
  }
  out.report["oracle"] = per_expr;
  out.report["fd_max_error"] = worst;
  out.report["fd_skipped"] = skipped;
  out.report["fd_tolerance"] = job.sampling.fd_tolerance;
  const bool ok = worst <= job.sampling.fd_tolerance;
  out.report["verdict"] = ok ? "pass" : "fail";
  out.exit_code = ok ? kExitPass : kExitFail;
  return out;
}

CommandOutcome run_command(Command c, const JobSpec& job, bool identities) {
  auto failure = [&](int code, const std::string& message) {
    CommandOutcome out;
    out.exit_code = code;
    out.report = {{"version", std::string(kVersion)},
                  {"command", std::string(command_name(c))},
                  {"error", message},
                  {"exit_code", code}};
    return out;
  };
  try {
    switch (c) {
      case Command::Curvature: return cmd_curvature(job);
      case Command::Verify: return cmd_verify(job, identities);
      case Command::Identities: return cmd_verify(job, true);
      case Command::Construct: return cmd_construct(job);
      case Command::Oracle: return cmd_oracle(job);
    }
  } catch (const ParseError& e) {
    CommandOutcome out = failure(kExitSpecError, e.what());
    out.report["position"] = e.position();
    return out;
  } catch (const SpecError& e) {
    return failure(kExitSpecError, e.what());
  } catch (const HypothesisError& e) {
    return failure(kExitHypothesis, e.what());
  } catch (const SingularDomainError& e) {
    return failure(kExitSingularDomain, e.what());
  } catch (const DomainError& e) {
    return failure(kExitSingularDomain, e.what());
  } catch (const std::invalid_argument& e) {
    return failure(kExitSpecError, e.what());
  }
  return failure(kExitSpecError, "unknown command");
}

std::string render_report(const json& report) { return report.dump(2) + "\n"; }

std::string sample_grid_csv(const JobSpec& job, int n) {
  const DiagonalMetric m = metric_of(job);
  const Expr rho = ricci(m).rho;
  std::vector<Expr> columns{rho};
  std::ostringstream os;
  os.precision(17);
  os << "x1,x2,rho";
  if (job.field || job.potential) {
    for (const auto& r : residual_system(m, field_of(job, m))) columns.push_back(r);
    os << ",R1,R2,R3,R4";
  }
  os << "\n";
  const Domain& d = job.domain;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Point p{d.x1.lo + (d.x1.hi - d.x1.lo) * i / (n - 1),
                    d.x2.lo + (d.x2.hi - d.x2.lo) * j / (n - 1)};
      os << p.x1 << "," << p.x2;
      for (const auto& e : columns) {
        os << ",";
        try {
          os << evaluate(e, p);
        } catch (const DomainError&) {
          os << "nan";
        }
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace ricci2d
