#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "t2r/dataset.hpp"

namespace t2r {

/// Exact-match projection used to find "similar" past jobs.
struct SimilarityKey {
  std::string source_file_name;
  std::string action_type;
  std::string application_type;
  std::string tool;

  static SimilarityKey from(const JobConfig& cfg);
  bool operator==(const SimilarityKey&) const = default;
};

struct SimilarityKeyHash {
  size_t operator()(const SimilarityKey& k) const;
};

/// Per-metric prediction where some metrics may be unavailable (NA).
struct BaselinePrediction {
  std::array<std::optional<double>, TargetMetrics::kCount> values{};
};

/// The as-requested allocations; life_time is never requested, so it stays NA.
BaselinePrediction user_request_predict(const JobRecord& record);

/// Per-metric maximum of measured metrics over history records with the same
/// SimilarityKey and timestamp in [job.timestamp - window_days, job.timestamp).
/// nullopt when no such record exists.
std::optional<TargetMetrics> heuristic_predict(std::span<const JobRecord> history,
                                               const JobRecord& job, int window_days);

/// Same contract as heuristic_predict behind a key index; build once, query many.
class HeuristicIndex {
 public:
  explicit HeuristicIndex(std::span<const JobRecord> history);
  std::optional<TargetMetrics> predict(const JobRecord& job, int window_days) const;

 private:
  struct Entry {
    int64_t timestamp;
    TargetMetrics metrics;
  };
  std::unordered_map<SimilarityKey, std::vector<Entry>, SimilarityKeyHash> by_key_;
};

inline constexpr int kDefaultHeuristicWindowDays = 10;

}  // namespace t2r
