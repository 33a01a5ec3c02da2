#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "t2r/common.hpp"

namespace t2r {

using ordered_json = nlohmann::ordered_json;

/// The four predicted metrics, in serialization order. life_time is stored in
/// seconds; reports convert to minutes at the very end.
struct TargetMetrics {
  static constexpr int kCount = 4;

  double life_time = 0.0;  // seconds
  double cpu_max = 0.0;    // vCPU
  double ram_max = 0.0;    // GB
  double disk_max = 0.0;   // GB

  static const char* name(int m);
  double& operator[](int m);
  double operator[](int m) const;

  /// All values finite and nonnegative.
  void validate() const;

  ordered_json to_json() const;
  static TargetMetrics from_json(const nlohmann::json& j);

  bool operator==(const TargetMetrics&) const = default;
};

/// String map kept as key-sorted pairs so serialization is canonical.
using StringMap = std::vector<std::pair<std::string, std::string>>;

struct ExecSpec {
  std::string command;
  std::string tool;
  std::string tool_version;

  bool operator==(const ExecSpec&) const = default;
};

inline constexpr int kPriorityMin = 0;
inline constexpr int kPriorityMax = 200;

extern const std::vector<std::string> kCachingPolicies;  // none/read_only/read_write/aggressive
extern const std::vector<std::string> kExpectedStates;   // success/fail

/// One job's configuration. Field set is a closed schema; ingestion rejects
/// unknown keys. Fields are ordered by descending importance for serialization.
struct JobConfig {
  std::string source_file_name;
  StringMap tags;  // action_type, application_type, free-form pairs
  int priority = kPriorityMin;
  StringMap build_config;
  ExecSpec exec_spec;
  std::vector<std::string> dependencies;
  std::string caching_policy = "read_only";
  std::string expected_state = "success";
  int replication = 1;

  /// Sorts tags/build_config by key; duplicate keys are a SchemaViolation.
  void canonicalize();
  /// Enum membership, priority band, replication >= 1.
  void validate() const;

  /// Value of a tag, or empty string when absent.
  std::string tag(const std::string& key) const;

  ordered_json to_json() const;
  /// Closed-schema ingestion; throws SchemaViolation on unknown or ill-typed keys.
  static JobConfig from_json(const nlohmann::json& j);

  bool operator==(const JobConfig&) const = default;
};

}  // namespace t2r
