#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "t2r/dataset.hpp"

namespace t2r {

/// Per-tool base cost vector: (life_time s, cpu_max vCPU, ram_max GB, disk_max GB).
struct ToolCost {
  std::string name;
  std::string version;
  TargetMetrics base;
};

const std::vector<ToolCost>& default_tool_catalog();

struct CountRange {
  int min = 0;
  int max = 0;
};

struct GeneratorSpec {
  uint64_t seed = 0;
  int n_jobs = 1000;
  int span_days = 10;
  std::vector<ToolCost> tool_catalog;  // empty = default catalog
  CountRange design_size_range{100, 20000};
  double noise_sigma = 0.3;        // log-space std of the multiplicative noise
  double heuristic_coverage = 0.64;  // share of jobs with heuristic-style requests
  CountRange filler_entries{0, 0};   // extra build_config padding pairs per job

  void validate() const;
  ordered_json to_json() const;
};

// ---------------------------------------------------------------------------
// Ground-truth resource function, version 1.
//
// For a job configuration the noise-free metrics are, per metric m in
// (life_time, cpu_max, ram_max, disk_max), the left-to-right double product
//
//   gt[m] = base[tool][m]
//         * size_factor          where size_factor = pow(design_size / 1000.0, 1.5)
//         * f_action[action][m]
//         * f_app[application][m]
//         * f_priority           where f_priority = 0.8 + 0.4 * (priority / 200.0)
//         * f_repl[m]            where f_repl = k for cpu/ram/disk and
//                                      1 + 0.1 * (k - 1) for life_time, k = replication
//         * f_cache[policy][m]
//         * f_state[state][m]
//
// design_size is read from the "design_size" tag, action from "action_type",
// application from "application_type"; the tool comes from exec_spec.tool. The
// multiplier tables live in datagen.cpp next to ground_truth() and are part of
// this versioned definition: any change must bump kGroundTruthVersion. The
// factor order above is normative so an independent reimplementation can match
// bit-for-bit.
// ---------------------------------------------------------------------------
inline constexpr int kGroundTruthVersion = 1;

/// Noise-free metrics for a generator-schema config. Throws BadConfig when the
/// config references tools/tags outside the generator's closed world.
TargetMetrics ground_truth(const JobConfig& cfg,
                           const std::vector<ToolCost>& catalog = default_tool_catalog());

/// Deterministic synthetic dataset: metrics = ground_truth * lognormal(0, sigma)
/// per metric, requested resources per heuristic_coverage, timestamps uniform
/// over the span. Identical spec -> byte-identical JSONL.
std::vector<JobRecord> generate_dataset(const GeneratorSpec& spec);

struct DatasetSplit {
  std::vector<JobRecord> train;
  std::vector<JobRecord> val;
  std::vector<JobRecord> test;
};

/// Seed-deterministic random 8:1:1 split; disjoint and exhaustive.
/// Throws EmptySplit when any part would be empty.
DatasetSplit split_random(const std::vector<JobRecord>& records, uint64_t seed);

struct TemporalSplit {
  std::vector<JobRecord> train;                 // first train_days of the span
  std::vector<std::vector<JobRecord>> windows;  // consecutive window_days buckets
};

/// Train period plus consecutive future windows of window_days each, measured
/// from the earliest timestamp; a partial trailing window is dropped.
TemporalSplit split_temporal(const std::vector<JobRecord>& records, int train_days,
                             int window_days);

}  // namespace t2r
