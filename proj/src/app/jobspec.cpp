#include "ricci2d/jobspec.hpp"

#include <fstream>
#include <sstream>

namespace ricci2d {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw SpecError(where + ": missing key \"" + key + "\"");
  }
  return j.at(key);
}

std::string require_string(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_string()) throw SpecError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

double require_number(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number()) throw SpecError(where + "." + key + " must be a number");
  return v.get<double>();
}

Interval read_interval(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SpecError(where + " must be a [lo, hi] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw SpecError(where + ": unknown key \"" + key + "\"");
  }
}

Expr parse_field(const std::string& text, const std::string& where) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(e.position(), where + ": " + e.detail());
  }
}

}  // namespace

JobSpec job_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("job spec must be a JSON object");
  reject_unknown_keys(j, {"metric", "field", "potential", "family", "domain", "sampling"}, "spec");
  JobSpec job;
  if (j.contains("metric")) {
    const json& m = j.at("metric");
    reject_unknown_keys(m, {"f1", "f2"}, "metric");
    job.metric = MetricSpec{require_string(m, "f1", "metric"), require_string(m, "f2", "metric")};
  }
  if (j.contains("field")) {
    const json& f = j.at("field");
    reject_unknown_keys(f, {"frame", "V1", "V2"}, "field");
    FieldSpec field;
    const std::string frame = f.contains("frame") ? require_string(f, "frame", "field") : "orthonormal";
    if (frame == "orthonormal") {
      field.frame = FieldFrame::Orthonormal;
    } else if (frame == "coordinate") {
      field.frame = FieldFrame::Coordinate;
    } else {
      throw SpecError("field.frame must be \"orthonormal\" or \"coordinate\"");
    }
    field.v1 = require_string(f, "V1", "field");
    field.v2 = require_string(f, "V2", "field");
    job.field = field;
  }
  if (j.contains("potential")) {
    if (!j.at("potential").is_string()) throw SpecError("potential must be a string");
    job.potential = j.at("potential").get<std::string>();
  }
  if (j.contains("family")) {
    if (!j.at("family").is_object()) throw SpecError("family must be an object");
    job.family = j.at("family");
  }
  if (j.contains("domain")) {
    const json& d = j.at("domain");
    reject_unknown_keys(d, {"x1", "x2", "guard"}, "domain");
    if (d.contains("x1")) job.domain.x1 = read_interval(d.at("x1"), "domain.x1");
    if (d.contains("x2")) job.domain.x2 = read_interval(d.at("x2"), "domain.x2");
    if (d.contains("guard")) job.domain.guard = require_number(d, "guard", "domain");
  }
  if (j.contains("sampling")) {
    const json& s = j.at("sampling");
    reject_unknown_keys(s, {"samples", "seed", "tolerance", "fd_step", "fd_tolerance"}, "sampling");
    if (s.contains("samples")) {
      if (!s.at("samples").is_number_unsigned()) throw SpecError("sampling.samples must be a positive integer");
      job.sampling.samples = s.at("samples").get<std::size_t>();
    }
    if (s.contains("seed")) {
      if (!s.at("seed").is_number_unsigned()) throw SpecError("sampling.seed must be a non-negative integer");
      job.sampling.seed = s.at("seed").get<std::uint64_t>();
    }
    if (s.contains("tolerance")) job.sampling.tolerance = require_number(s, "tolerance", "sampling");
    if (s.contains("fd_step")) job.sampling.fd_step = require_number(s, "fd_step", "sampling");
    if (s.contains("fd_tolerance")) job.sampling.fd_tolerance = require_number(s, "fd_tolerance", "sampling");
  }
  try {
    job.domain.validate();
    job.sampling.validate();
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  return job;
}

json job_to_json(const JobSpec& job) {
  json j;
  if (job.metric) j["metric"] = {{"f1", job.metric->f1}, {"f2", job.metric->f2}};
  if (job.field) {
    j["field"] = {{"frame", job.field->frame == FieldFrame::Orthonormal ? "orthonormal" : "coordinate"},
                  {"V1", job.field->v1},
                  {"V2", job.field->v2}};
  }
  if (job.potential) j["potential"] = *job.potential;
  if (job.family) j["family"] = *job.family;
  j["domain"] = {{"x1", {job.domain.x1.lo, job.domain.x1.hi}},
                 {"x2", {job.domain.x2.lo, job.domain.x2.hi}},
                 {"guard", job.domain.guard}};
  j["sampling"] = {{"samples", job.sampling.samples},
                   {"seed", job.sampling.seed},
                   {"tolerance", job.sampling.tolerance},
                   {"fd_step", job.sampling.fd_step},
                   {"fd_tolerance", job.sampling.fd_tolerance}};
  return j;
}

JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SpecError("spec file " + path + " is not valid JSON: " + e.what());
  }
  return job_from_json(j);
}

void apply_domain_override(Domain& d, const std::string& text) {
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ';')) {
    if (part.empty()) continue;
    const auto colon = part.find(':');
    const auto comma = part.find(',');
    if (colon == std::string::npos || comma == std::string::npos || comma < colon) {
      throw SpecError("--domain expects \"x1:lo,hi;x2:lo,hi\", got \"" + text + "\"");
    }
    const std::string name = part.substr(0, colon);
    Interval r;
    try {
      r.lo = std::stod(part.substr(colon + 1, comma - colon - 1));
      r.hi = std::stod(part.substr(comma + 1));
    } catch (const std::exception&) {
      throw SpecError("--domain bounds must be numbers: \"" + part + "\"");
    }
    if (name == "x1") {
      d.x1 = r;
    } else if (name == "x2") {
      d.x2 = r;
    } else {
      throw SpecError("--domain variable must be x1 or x2, got \"" + name + "\"");
    }
  }
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

DiagonalMetric metric_of(const JobSpec& job) {
  if (!job.metric) throw SpecError("spec has no metric");
  return DiagonalMetric(parse_field(job.metric->f1, "metric.f1"),
                        parse_field(job.metric->f2, "metric.f2"));
}

FamilyParams family_of(const json& family) {
  const std::string kind = require_string(family, "kind", "family");
  const std::string where = "family(" + kind + ")";
  auto expr = [&](const char* key) { return parse_field(require_string(family, key, where), where + "." + key); };
  auto num = [&](const char* key) { return require_number(family, key, where); };
  if (kind == "constant_components") {
    reject_unknown_keys(family, {"kind", "f1", "f2", "c1", "c2"}, where);
    return ConstantComponents{expr("f1"), expr("f2"), num("c1"), num("c2")};
  }
  if (kind == "branch1") {
    reject_unknown_keys(family, {"kind", "f2", "k", "c"}, where);
    return Branch1{expr("f2"), num("k"), num("c")};
  }
  if (kind == "branch2") {
    reject_unknown_keys(family, {"kind", "f2", "c", "c1", "c2"}, where);
    return Branch2{expr("f2"), num("c"), num("c1"), num("c2")};
  }
  if (kind == "constant_metric") {
    reject_unknown_keys(family, {"kind", "k1", "k2", "c1", "c2"}, where);
    return ConstantMetric{num("k1"), num("k2"), num("c1"), num("c2")};
  }
  throw SpecError("unknown family kind \"" + kind + "\"");
}

}  // namespace ricci2d
