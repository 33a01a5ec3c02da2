#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "t2r/baselines.hpp"
#include "t2r/dataset.hpp"

namespace t2r {

/// Permutation-invariant sum: sorts by value, then Kahan-accumulates. Reports
/// built on it are bit-identical under input reordering.
double stable_sum(std::vector<double> values);

/// Mean absolute error. Throws LengthMismatch / EmptyInput.
double mae(std::span<const double> pred, std::span<const double> truth);

/// Product-moment correlation. Throws DegenerateInput when either vector is
/// constant (undefined, never coerced to 0).
double pearson(std::span<const double> x, std::span<const double> y);

/// Pearson over fractional ranks; ties get the mean rank.
double spearman(std::span<const double> x, std::span<const double> y);

/// Average (fractional) ranks, 1-based; ties share the mean of their positions.
std::vector<double> fractional_ranks(std::span<const double> x);

/// Fisher-Pearson sample skewness (g1).
double skewness(std::span<const double> x);

enum class FailureCategory {
  kNone,
  kMalformedJson,
  kUnknownKey,
  kMissingKey,
  kNonNumericValue,
  kBudgetExhausted,
};

const char* failure_category_name(FailureCategory c);

/// One predictor outcome for one record. Baselines leave unavailable metrics
/// unset; generation failures set `failed`.
struct PredOutcome {
  std::array<std::optional<double>, TargetMetrics::kCount> values{};
  bool failed = false;
  FailureCategory category = FailureCategory::kNone;
};

using Predictor = std::function<PredOutcome(const JobRecord&)>;

struct MetricSummary {
  std::optional<double> mae;       // life_time reported in minutes
  std::optional<double> pearson;
  std::optional<double> spearman;
  int n = 0;
};

struct MetricsReport {
  std::array<MetricSummary, TargetMetrics::kCount> per_metric{};
  std::optional<double> avg_pearson;   // arithmetic mean over available metrics
  std::optional<double> avg_spearman;
  int n_examples = 0;
  int n_parse_failures = 0;
  std::map<std::string, int> failure_counts;

  ordered_json to_json() const;
  /// One CSV row; see csv_header() for the column order.
  std::string csv_row(const std::string& label) const;
  static std::string csv_header();
};

/// Runs the predictor over every record and aggregates. life_time MAE is
/// converted seconds -> minutes here, at report level only. Correlations are
/// computed on raw values and averaged over the metrics that have them.
MetricsReport evaluate(const Predictor& predictor, std::span<const JobRecord> test);

/// Predictor adapters for the two baselines. The heuristic falls back to the
/// user request for jobs with no history.
Predictor make_user_request_predictor();
Predictor make_heuristic_predictor(std::vector<JobRecord> history, int window_days);

}  // namespace t2r
