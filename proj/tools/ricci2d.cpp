// ricci2d: curvature, Ricci-field verification and family construction for
// diagonal metrics on the plane.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ricci2d/commands.hpp"

namespace {

struct Options {
  std::string spec;
  std::string out;
  std::string emit_spec;
  std::string emit_grid;
  std::string domain;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<double> tolerance;
  bool identities = false;
};

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("--spec", opt.spec, "JSON job file")->required();
  sub->add_option("--out", opt.out, "write the report here instead of stdout");
  sub->add_option("--seed", opt.seed, "override sampling.seed");
  sub->add_option("--samples", opt.samples, "override sampling.samples");
  sub->add_option("--tolerance", opt.tolerance, "override sampling.tolerance");
  sub->add_option("--domain", opt.domain, "override the domain, \"x1:lo,hi;x2:lo,hi\"");
  sub->add_option("--emit-grid", opt.emit_grid, "write a CSV grid of rho and residuals");
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  os << text;
  return static_cast<bool>(os);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ricci2d;

  CLI::App app{"Ricci vector fields of diagonal metrics on the plane"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options opt;

  auto* curvature = app.add_subcommand("curvature", "frame coefficients, Ricci and scalar curvature");
  auto* verify = app.add_subcommand("verify", "check nabla V = Q for a field or potential");
  auto* construct = app.add_subcommand("construct", "build and verify a family member");
  auto* oracle = app.add_subcommand("oracle", "finite-difference check of every derived expression");
  auto* identities = app.add_subcommand("identities", "verify plus the identity checks");
  for (auto* sub : {curvature, verify, construct, oracle, identities}) add_common(sub, opt);
  verify->add_flag("--identities", opt.identities, "also run the identity checks");
  construct->add_option("--emit-spec", opt.emit_spec, "write the derived metric+field job here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitSpecError;
  }

  const Command command = *command_from_name(app.get_subcommands().front()->get_name());

  CommandOutcome outcome;
  JobSpec job;
  try {
    job = load_job(opt.spec);
    if (opt.seed) job.sampling.seed = *opt.seed;
    if (opt.samples) job.sampling.samples = *opt.samples;
    if (opt.tolerance) job.sampling.tolerance = *opt.tolerance;
    if (!opt.domain.empty()) apply_domain_override(job.domain, opt.domain);
    job.sampling.validate();
    outcome = run_command(command, job, opt.identities);
  } catch (const std::exception& e) {
    outcome.exit_code = kExitSpecError;
    outcome.report = {{"version", std::string(kVersion)},
                      {"command", std::string(command_name(command))},
                      {"error", e.what()},
                      {"exit_code", int(kExitSpecError)}};
  }

  if (outcome.report.contains("error")) {
    std::cerr << "ricci2d: " << outcome.report.at("error").get<std::string>() << "\n";
  }
  const std::string text = render_report(outcome.report);
  if (opt.out.empty()) {
    std::cout << text;
  } else if (!write_file(opt.out, text)) {
    std::cerr << "ricci2d: cannot write " << opt.out << "\n";
    return kExitSpecError;
  }
  if (outcome.derived_spec && !opt.emit_spec.empty()) {
    write_file(opt.emit_spec, outcome.derived_spec->dump(2) + "\n");
  }
  if (!opt.emit_grid.empty() && outcome.exit_code <= kExitFail) {
    const JobSpec grid_job = outcome.derived_spec ? job_from_json(*outcome.derived_spec) : job;
    write_file(opt.emit_grid, sample_grid_csv(grid_job));
  }
  return outcome.exit_code;
}
