#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "t2r/job.hpp"

namespace t2r {

/// One observed job: configuration, what the user asked for, what it actually
/// used, and when it ran. The JSONL of these records is the canonical dataset
/// format for every tool and test.
struct JobRecord {
  JobConfig config;
  TargetMetrics requested;  // user-requested allocations (life_time unused, kept 0)
  TargetMetrics metrics;    // measured truth
  int64_t timestamp = 0;    // epoch seconds
  std::string job_id;

  ordered_json to_json() const;
  static JobRecord from_json(const nlohmann::json& j);
};

std::string to_jsonl(const std::vector<JobRecord>& records);
std::vector<JobRecord> from_jsonl_string(const std::string& text);

void write_jsonl(const std::string& path, const std::vector<JobRecord>& records);
std::vector<JobRecord> read_jsonl(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace t2r
