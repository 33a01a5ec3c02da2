#include "t2r/job.hpp"

#include <algorithm>
#include <cmath>

namespace t2r {

const std::vector<std::string> kCachingPolicies = {"none", "read_only", "read_write",
                                                   "aggressive"};
const std::vector<std::string> kExpectedStates = {"success", "fail"};

const char* TargetMetrics::name(int m) {
  static const char* names[kCount] = {"life_time", "cpu_max", "ram_max", "disk_max"};
  return names[m];
}

double& TargetMetrics::operator[](int m) {
  switch (m) {
    case 0: return life_time;
    case 1: return cpu_max;
    case 2: return ram_max;
    default: return disk_max;
  }
}

double TargetMetrics::operator[](int m) const {
  return const_cast<TargetMetrics&>(*this)[m];
}

void TargetMetrics::validate() const {
  for (int m = 0; m < kCount; ++m) {
    double v = (*this)[m];
    if (!std::isfinite(v)) fail(Err::NotFinite, std::string(name(m)) + " is not finite");
    if (v < 0.0) fail(Err::SchemaViolation, std::string(name(m)) + " is negative");
  }
}

ordered_json TargetMetrics::to_json() const {
  ordered_json j;
  for (int m = 0; m < kCount; ++m) j[name(m)] = (*this)[m];
  return j;
}

TargetMetrics TargetMetrics::from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(Err::SchemaViolation, "metrics: expected object");
  TargetMetrics y;
  size_t seen = 0;
  for (int m = 0; m < kCount; ++m) {
    auto it = j.find(name(m));
    if (it == j.end()) fail(Err::SchemaViolation, std::string("metrics: missing ") + name(m));
    if (!it->is_number()) fail(Err::SchemaViolation, std::string("metrics: ") + name(m) + " not a number");
    y[m] = it->get<double>();
    ++seen;
  }
  if (j.size() != seen) fail(Err::SchemaViolation, "metrics: unknown keys present");
  y.validate();
  return y;
}

namespace {

void sort_map(StringMap& m, const char* what) {
  std::sort(m.begin(), m.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < m.size(); ++i) {
    if (m[i].first == m[i - 1].first) {
      fail(Err::SchemaViolation, std::string(what) + ": duplicate key '" + m[i].first + "'");
    }
  }
}

StringMap map_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_object()) fail(Err::SchemaViolation, std::string(what) + ": expected object");
  StringMap m;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) {
      fail(Err::SchemaViolation, std::string(what) + ": value of '" + it.key() + "' not a string");
    }
    m.emplace_back(it.key(), it.value().get<std::string>());
  }
  sort_map(m, what);
  return m;
}

ordered_json map_to_json(const StringMap& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

bool contains(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

void JobConfig::canonicalize() {
  sort_map(tags, "tags");
  sort_map(build_config, "build_config");
}

void JobConfig::validate() const {
  if (source_file_name.empty()) fail(Err::SchemaViolation, "source_file_name empty");
  if (priority < kPriorityMin || priority > kPriorityMax) {
    fail(Err::SchemaViolation, "priority " + std::to_string(priority) + " outside band");
  }
  if (!contains(kCachingPolicies, caching_policy)) {
    fail(Err::SchemaViolation, "unknown caching_policy '" + caching_policy + "'");
  }
  if (!contains(kExpectedStates, expected_state)) {
    fail(Err::SchemaViolation, "unknown expected_state '" + expected_state + "'");
  }
  if (replication < 1) fail(Err::SchemaViolation, "replication < 1");
}

std::string JobConfig::tag(const std::string& key) const {
  for (const auto& [k, v] : tags) {
    if (k == key) return v;
  }
  return {};
}

ordered_json JobConfig::to_json() const {
  // Keys in descending-importance order; this order is a contract.
  ordered_json j;
  j["source_file_name"] = source_file_name;
  j["tags"] = map_to_json(tags);
  j["priority"] = priority;
  j["build_config"] = map_to_json(build_config);
  ordered_json ex;
  ex["command"] = exec_spec.command;
  ex["tool"] = exec_spec.tool;
  ex["tool_version"] = exec_spec.tool_version;
  j["exec_spec"] = ex;
  j["dependencies"] = dependencies;
  j["caching_policy"] = caching_policy;
  j["expected_state"] = expected_state;
  j["replication"] = replication;
  return j;
}

JobConfig JobConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(Err::SchemaViolation, "config: expected object");
  static const std::vector<std::string> known = {
      "source_file_name", "tags",         "priority",       "build_config", "exec_spec",
      "dependencies",     "caching_policy", "expected_state", "replication"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!contains(known, it.key())) {
      fail(Err::SchemaViolation, "config: unknown key '" + it.key() + "'");
    }
  }
  auto require = [&](const char* key) -> const nlohmann::json& {
    auto it = j.find(key);
    if (it == j.end()) fail(Err::SchemaViolation, std::string("config: missing ") + key);
    return *it;
  };

  JobConfig c;
  c.source_file_name = require("source_file_name").get<std::string>();
  c.tags = map_from_json(require("tags"), "tags");
  if (!require("priority").is_number_integer()) fail(Err::SchemaViolation, "priority not integer");
  c.priority = require("priority").get<int>();
  c.build_config = map_from_json(require("build_config"), "build_config");

  const auto& ex = require("exec_spec");
  if (!ex.is_object() || ex.size() != 3) fail(Err::SchemaViolation, "exec_spec malformed");
  for (const char* k : {"command", "tool", "tool_version"}) {
    if (!ex.contains(k) || !ex[k].is_string()) {
      fail(Err::SchemaViolation, std::string("exec_spec: bad ") + k);
    }
  }
  c.exec_spec = {ex["command"].get<std::string>(), ex["tool"].get<std::string>(),
                 ex["tool_version"].get<std::string>()};

  const auto& deps = require("dependencies");
  if (!deps.is_array()) fail(Err::SchemaViolation, "dependencies not an array");
  for (const auto& d : deps) {
    if (!d.is_string()) fail(Err::SchemaViolation, "dependency not a string");
    c.dependencies.push_back(d.get<std::string>());
  }
  c.caching_policy = require("caching_policy").get<std::string>();
  c.expected_state = require("expected_state").get<std::string>();
  if (!require("replication").is_number_integer()) {
    fail(Err::SchemaViolation, "replication not integer");
  }
  c.replication = require("replication").get<int>();
  c.validate();
  return c;
}

}  // namespace t2r
