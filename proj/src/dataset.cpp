#include "t2r/dataset.hpp"

#include <fstream>
#include <sstream>

namespace t2r {

ordered_json JobRecord::to_json() const {
  ordered_json j;
  j["config"] = config.to_json();
  j["requested"] = requested.to_json();
  j["metrics"] = metrics.to_json();
  j["timestamp"] = timestamp;
  j["job_id"] = job_id;
  return j;
}

JobRecord JobRecord::from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 5) fail(Err::SchemaViolation, "record: expected 5 fields");
  for (const char* k : {"config", "requested", "metrics", "timestamp", "job_id"}) {
    if (!j.contains(k)) fail(Err::SchemaViolation, std::string("record: missing ") + k);
  }
  JobRecord r;
  r.config = JobConfig::from_json(j["config"]);
  r.requested = TargetMetrics::from_json(j["requested"]);
  r.metrics = TargetMetrics::from_json(j["metrics"]);
  if (!j["timestamp"].is_number_integer()) fail(Err::SchemaViolation, "timestamp not integer");
  r.timestamp = j["timestamp"].get<int64_t>();
  if (!j["job_id"].is_string()) fail(Err::SchemaViolation, "job_id not a string");
  r.job_id = j["job_id"].get<std::string>();
  return r;
}

std::string to_jsonl(const std::vector<JobRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.to_json().dump();
    out += '\n';
  }
  return out;
}

std::vector<JobRecord> from_jsonl_string(const std::string& text) {
  std::vector<JobRecord> records;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      fail(Err::SchemaViolation, "line " + std::to_string(lineno) + ": " + e.what());
    }
    records.push_back(JobRecord::from_json(j));
  }
  return records;
}

void write_jsonl(const std::string& path, const std::vector<JobRecord>& records) {
  write_file(path, to_jsonl(records));
}

std::vector<JobRecord> read_jsonl(const std::string& path) {
  return from_jsonl_string(read_file(path));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Err::Io, "cannot write " + path);
  out << content;
  if (!out) fail(Err::Io, "write failed for " + path);
}

}  // namespace t2r
