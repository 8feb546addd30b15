#include "ardlboot/report.hpp"

#include "ardlboot/error.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace ardlboot {

using nlohmann::json;

const TestBlock* ModelBlock::find(TestKind kind) const {
  for (const auto& t : tests) {
    if (t.kind == kind) return &t;
  }
  return nullptr;
}

const ModelBlock* AnalysisReport::find(Conditioning conditioning) const {
  for (const auto& m : models) {
    if (m.spec.conditioning == conditioning) return &m;
  }
  return nullptr;
}

namespace {

template <typename T, typename Parse>
T parse_enum(const json& j, Parse parse, const char* what) {
  const auto v = parse(j.get<std::string>());
  if (!v) throw Error(Errc::InvalidArgument, std::string("unknown ") + what + " '" +
                                                 j.get<std::string>() + "'");
  return *v;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json test_json(const TestBlock& t) {
  return {{"test", to_string(t.kind)},
          {"observed", t.observed},
          {"critical_value", t.critical_value},
          {"p_value", t.p_value},
          {"reject", t.reject},
          {"discards", t.discards},
          {"bound_i0", optional_number(t.bound_i0)},
          {"bound_i1", optional_number(t.bound_i1)},
          {"bound_verdict", to_string(t.bound_verdict)}};
}

TestBlock test_from(const json& j) {
  TestBlock t;
  t.kind = parse_enum<TestKind>(j.at("test"), test_kind_from_string, "test");
  t.observed = j.at("observed").get<double>();
  t.critical_value = j.at("critical_value").get<double>();
  t.p_value = j.at("p_value").get<double>();
  t.reject = j.at("reject").get<bool>();
  t.discards = j.at("discards").get<int>();
  t.bound_i0 = read_optional(j.at("bound_i0"));
  t.bound_i1 = read_optional(j.at("bound_i1"));
  t.bound_verdict =
      parse_enum<BoundVerdict>(j.at("bound_verdict"), bound_verdict_from_string, "verdict");
  return t;
}

json model_json(const ModelBlock& m) {
  json tests = json::array();
  for (const auto& t : m.tests) tests.push_back(test_json(t));
  return {{"case", to_string(m.spec.det_case)},
          {"conditioning", to_string(m.spec.conditioning)},
          {"p_y", m.spec.p_y},
          {"p_x", m.spec.p_x},
          {"vecm_lag", m.vecm_lag},
          {"nobs", m.nobs},
          {"tests", tests}};
}

ModelBlock model_from(const json& j) {
  ModelBlock m;
  m.spec.det_case = parse_enum<DeterministicCase>(j.at("case"), case_from_string, "case");
  m.spec.conditioning =
      parse_enum<Conditioning>(j.at("conditioning"), conditioning_from_string, "conditioning");
  m.spec.p_y = j.at("p_y").get<int>();
  m.spec.p_x = j.at("p_x").get<std::vector<int>>();
  m.vecm_lag = j.at("vecm_lag").get<int>();
  m.nobs = j.at("nobs").get<int>();
  for (const auto& t : j.at("tests")) m.tests.push_back(test_from(t));
  return m;
}

}  // namespace

std::string to_json(const AnalysisReport& report, int indent) {
  json models = json::array();
  for (const auto& m : report.models) models.push_back(model_json(m));
  const auto& p = report.provenance;
  json j = {
      {"data",
       {{"dependent", report.dependent},
        {"regressors", report.regressors},
        {"T", report.T},
        {"log", report.log_transform}}},
      {"models", models},
      {"outcome", report.outcome ? json(to_string(*report.outcome)) : json(nullptr)},
      {"provenance",
       {{"seed", p.seed},
        {"replicates", p.replicates},
        {"alpha", p.alpha},
        {"timestamp", p.timestamp},
        {"input_digest", p.input_digest},
        {"threshold_set", p.threshold_set}}},
  };
  return j.dump(indent);
}

AnalysisReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    AnalysisReport r;
    const auto& d = j.at("data");
    r.dependent = d.at("dependent").get<std::string>();
    r.regressors = d.at("regressors").get<std::vector<std::string>>();
    r.T = d.at("T").get<int>();
    r.log_transform = d.at("log").get<bool>();
    for (const auto& m : j.at("models")) r.models.push_back(model_from(m));
    if (!j.at("outcome").is_null()) {
      r.outcome = parse_enum<Outcome>(j.at("outcome"), outcome_from_string, "outcome");
    }
    const auto& p = j.at("provenance");
    r.provenance.seed = p.at("seed").get<std::uint64_t>();
    r.provenance.replicates = p.at("replicates").get<int>();
    r.provenance.alpha = p.at("alpha").get<double>();
    r.provenance.timestamp = p.at("timestamp").get<std::string>();
    r.provenance.input_digest = p.at("input_digest").get<std::string>();
    r.provenance.threshold_set = p.at("threshold_set").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed report: ") + e.what());
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace ardlboot
