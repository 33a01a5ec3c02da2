#include "t2r/baselines.hpp"

#include <algorithm>

namespace t2r {

SimilarityKey SimilarityKey::from(const JobConfig& cfg) {
  return {cfg.source_file_name, cfg.tag("action_type"), cfg.tag("application_type"),
          cfg.exec_spec.tool};
}

size_t SimilarityKeyHash::operator()(const SimilarityKey& k) const {
  uint64_t h = fnv1a64(k.source_file_name);
  h = h * 31 + fnv1a64(k.action_type);
  h = h * 31 + fnv1a64(k.application_type);
  h = h * 31 + fnv1a64(k.tool);
  return static_cast<size_t>(h);
}

BaselinePrediction user_request_predict(const JobRecord& record) {
  BaselinePrediction p;
  // life_time (index 0) stays NA: users request cpu/ram/disk only.
  p.values[1] = record.requested.cpu_max;
  p.values[2] = record.requested.ram_max;
  p.values[3] = record.requested.disk_max;
  return p;
}

namespace {

void fold_max(std::optional<TargetMetrics>& acc, const TargetMetrics& m) {
  if (!acc) {
    acc = m;
    return;
  }
  for (int i = 0; i < TargetMetrics::kCount; ++i) {
    (*acc)[i] = std::max((*acc)[i], m[i]);
  }
}

}  // namespace

std::optional<TargetMetrics> heuristic_predict(std::span<const JobRecord> history,
                                               const JobRecord& job, int window_days) {
  SimilarityKey key = SimilarityKey::from(job.config);
  int64_t lo = job.timestamp - static_cast<int64_t>(window_days) * 86400;
  std::optional<TargetMetrics> acc;
  for (const auto& past : history) {
    // Window is [job.ts - window, job.ts): the boundary record counts, the job's
    // own timestamp does not.
    if (past.timestamp < lo || past.timestamp >= job.timestamp) continue;
    if (SimilarityKey::from(past.config) == key) fold_max(acc, past.metrics);
  }
  return acc;
}

HeuristicIndex::HeuristicIndex(std::span<const JobRecord> history) {
  for (const auto& r : history) {
    by_key_[SimilarityKey::from(r.config)].push_back({r.timestamp, r.metrics});
  }
  for (auto& [key, entries] : by_key_) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.timestamp < b.timestamp; });
  }
}

std::optional<TargetMetrics> HeuristicIndex::predict(const JobRecord& job,
                                                     int window_days) const {
  auto it = by_key_.find(SimilarityKey::from(job.config));
  if (it == by_key_.end()) return std::nullopt;
  const auto& entries = it->second;
  int64_t lo = job.timestamp - static_cast<int64_t>(window_days) * 86400;
  auto first = std::lower_bound(entries.begin(), entries.end(), lo,
                                [](const Entry& e, int64_t t) { return e.timestamp < t; });
  std::optional<TargetMetrics> acc;
  for (auto p = first; p != entries.end() && p->timestamp < job.timestamp; ++p) {
    fold_max(acc, p->metrics);
  }
  return acc;
}

}  // namespace t2r
