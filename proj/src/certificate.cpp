#include "erdos/certificate.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "erdos/errors.hpp"

namespace erdos {

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp + "'");
    out << content;
    if (!out) throw Error(ErrorCode::IoError, "failed writing '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error(ErrorCode::IoError, "cannot move '" + tmp + "' to '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json interval_set_to_json(const IntervalSet& set) {
  Json arr = Json::array();
  for (const Interval& iv : set.parts())
    arr.push_back(Json::array({rat_str(iv.lo), rat_str(iv.hi)}));
  return arr;
}

IntervalSet interval_set_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "interval set json must be an array");
  std::vector<Interval> raw;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error(ErrorCode::ParseError, "interval must be a [lo, hi] pair");
    raw.push_back({parse_rational(pair[0].get<std::string>()),
                   parse_rational(pair[1].get<std::string>())});
  }
  return IntervalSet::normalized(std::move(raw));
}

IntervalSet load_interval_set(const std::string& path) {
  Json j = Json::parse(read_file(path), nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorCode::ParseError, "invalid interval set json in '" + path + "'");
  if (j.is_object() && j.contains("G")) return interval_set_from_json(j["G"]);
  return interval_set_from_json(j);
}

namespace {

Json certificate_head(const char* method, const Pattern& pattern) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["type"] = "certificate";
  j["tool_version"] = kToolVersion;
  j["method"] = method;
  j["pattern"] = pattern.to_json();
  j["target"] = Rect{Rational(0), Rational(1), Rational(1), Rational(2)}.to_json();
  return j;
}

Json verification_digest(const CoverageReport& report) {
  return report.to_json(false);
}

}  // namespace

Json make_lemma3_certificate(const Pattern& pattern, const Lemma3Plan& plan) {
  Json j = certificate_head("lemma3", pattern);
  j["plan"] = plan.to_json();
  j["sets"] = Json::object({{"G", interval_set_to_json(plan.G)}});
  j["measures"] = Json::object({{"G", rat_str(plan.measure)}, {"bound", rat_str(plan.bound)}});
  j["verification"] = verification_digest(plan.verification);
  return j;
}

Json make_theorem4_certificate(const Pattern& pattern, const Theorem4Witness& witness) {
  Json j = certificate_head("theorem4", pattern);
  j["params"] = Json::object({{"eps", rat_str(witness.eps)},
                              {"stages", witness.stages.size()}});
  Json stages = Json::array();
  for (const StageCertificate& s : witness.stages) {
    Json sj = Json::object();
    sj["stage"] = s.stage;
    sj["subset"] = s.subset.to_json()["points"];
    sj["eps_achieved"] = rat_str(s.eps_achieved);
    sj["target"] = rat_str(s.target);
    sj["plan"] = s.plan.to_json();
    stages.push_back(std::move(sj));
  }
  j["stages"] = stages;
  j["sets"] = Json::object({{"G", interval_set_to_json(witness.G)}});
  j["measures"] = Json::object({{"G", rat_str(witness.G.measure())},
                                {"stage_sum", rat_str(witness.total_measure)}});
  return j;
}

Json make_lemma10_certificate(const Pattern& pattern, const Lemma10Stage& stage) {
  Json j = certificate_head("lemma10", pattern);
  j["stage"] = stage.to_json();
  j["sets"] = Json::object({{"H", interval_set_to_json(stage.H)}});
  return j;
}

Json make_thm15_certificate(const Pattern& pattern, const Thm15Result& result) {
  Json j = certificate_head("thm15", pattern);
  j["params"] = result.params.to_json();
  j["selection"] = result.selection.to_json();
  j["plan"] = result.plan.to_json();
  j["sets"] = Json::object({{"G", interval_set_to_json(result.plan.G)},
                            {"S", interval_set_to_json(result.plan.S)},
                            {"H", interval_set_to_json(result.plan.H)}});
  j["measures"] = Json::object({{"G", rat_str(result.plan.measure_G)},
                                {"S", rat_str(result.plan.measure_S)},
                                {"H", rat_str(result.plan.measure_H)}});
  j["verification"] = verification_digest(result.final_verification);
  j["rng"] = Json::object({{"algorithm", "splitmix64"},
                           {"bernoulli_bias", "< 2^-64 (64-bit uniform vs exact rational)"}});
  return j;
}

Json make_thm14b_certificate(const Pattern& pattern, const Thm14bResult& result) {
  Json j = certificate_head("thm14b", pattern);
  j["params"] = Json::object({{"eps", rat_str(result.eps)},
                              {"n", result.n},
                              {"k", result.k},
                              {"delta", rat_str(result.delta)},
                              {"window_u", rat_str(result.window_u)},
                              {"A", rat_str(result.A)},
                              {"B", rat_str(result.B)}});
  j["Y"] = result.Y.to_json()["points"];
  j["plan"] = result.plan.to_json();
  j["sets"] = Json::object({{"G", interval_set_to_json(result.plan.G)},
                            {"S", interval_set_to_json(result.plan.S)},
                            {"H", interval_set_to_json(result.plan.H)}});
  j["measures"] = Json::object({{"G", rat_str(result.plan.measure_G)},
                                {"S", rat_str(result.plan.measure_S)},
                                {"H", rat_str(result.plan.measure_H)},
                                {"leftover", rat_str(result.leftover)}});
  j["verification"] = Json::object({{"covers_unit", result.covers_unit}});
  j["approx"] = Json::object({{"exp_bound", result.exp_bound},
                              {"quadrature_tol", result.quadrature_tol},
                              {"note", "exp_bound is a double; all accept checks are exact"}});
  j["rng"] = Json::object({{"algorithm", "splitmix64"},
                           {"bernoulli_bias", "< 2^-64 (64-bit uniform vs exact rational)"}});
  return j;
}

std::string certificate_created_at() {
  std::time_t now = std::time(nullptr);
  if (const char* pinned = std::getenv("SOURCE_DATE_EPOCH"))
    now = static_cast<std::time_t>(std::strtoll(pinned, nullptr, 10));
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::string dump_certificate(Json certificate) {
  certificate["created_at"] = certificate_created_at();
  return certificate.dump(2) + "\n";
}

}  // namespace erdos
