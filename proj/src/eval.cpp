#include "t2r/eval.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace t2r {

double stable_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0, comp = 0.0;
  for (double v : values) {
    double y = v - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

namespace {

void check_pair(std::span<const double> x, std::span<const double> y, size_t min_len) {
  if (x.size() != y.size()) fail(Err::LengthMismatch, "metric inputs differ in length");
  if (x.size() < min_len) fail(Err::EmptyInput, "metric inputs too short");
}

bool is_constant(std::span<const double> x) {
  for (double v : x) {
    if (v != x[0]) return false;
  }
  return true;
}

double mean_of(std::span<const double> x) {
  return stable_sum({x.begin(), x.end()}) / static_cast<double>(x.size());
}

}  // namespace

double mae(std::span<const double> pred, std::span<const double> truth) {
  check_pair(pred, truth, 1);
  std::vector<double> abs_err(pred.size());
  for (size_t i = 0; i < pred.size(); ++i) abs_err[i] = std::fabs(pred[i] - truth[i]);
  return stable_sum(std::move(abs_err)) / static_cast<double>(pred.size());
}

double pearson(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y, 2);
  if (is_constant(x) || is_constant(y)) {
    fail(Err::DegenerateInput, "pearson: constant input is undefined");
  }
  size_t n = x.size();
  double mx = mean_of(x), my = mean_of(y);
  std::vector<double> xy(n), xx(n), yy(n);
  for (size_t i = 0; i < n; ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    xy[i] = dx * dy;
    xx[i] = dx * dx;
    yy[i] = dy * dy;
  }
  double sxy = stable_sum(std::move(xy));
  double sxx = stable_sum(std::move(xx));
  double syy = stable_sum(std::move(yy));
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> fractional_ranks(std::span<const double> x) {
  size_t n = x.size();
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    double mean_rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y, 2);
  if (is_constant(x) || is_constant(y)) {
    fail(Err::DegenerateInput, "spearman: constant input is undefined");
  }
  std::vector<double> rx = fractional_ranks(x);
  std::vector<double> ry = fractional_ranks(y);
  return pearson(rx, ry);
}

double skewness(std::span<const double> x) {
  if (x.size() < 3) fail(Err::EmptyInput, "skewness needs >= 3 values");
  double m = mean_of(x);
  std::vector<double> d2(x.size()), d3(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    double d = x[i] - m;
    d2[i] = d * d;
    d3[i] = d * d * d;
  }
  double n = static_cast<double>(x.size());
  double m2 = stable_sum(std::move(d2)) / n;
  double m3 = stable_sum(std::move(d3)) / n;
  if (m2 == 0.0) fail(Err::DegenerateInput, "skewness: constant input");
  return m3 / std::pow(m2, 1.5);
}

const char* failure_category_name(FailureCategory c) {
  switch (c) {
    case FailureCategory::kNone: return "none";
    case FailureCategory::kMalformedJson: return "malformed_json";
    case FailureCategory::kUnknownKey: return "unknown_key";
    case FailureCategory::kMissingKey: return "missing_key";
    case FailureCategory::kNonNumericValue: return "non_numeric_value";
    case FailureCategory::kBudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

ordered_json MetricsReport::to_json() const {
  ordered_json j;
  for (int m = 0; m < TargetMetrics::kCount; ++m) {
    ordered_json pm;
    const MetricSummary& s = per_metric[static_cast<size_t>(m)];
    pm["mae"] = s.mae ? ordered_json(*s.mae) : ordered_json(nullptr);
    pm["pearson"] = s.pearson ? ordered_json(*s.pearson) : ordered_json(nullptr);
    pm["spearman"] = s.spearman ? ordered_json(*s.spearman) : ordered_json(nullptr);
    pm["n"] = s.n;
    j[TargetMetrics::name(m)] = pm;
  }
  j["avg_pearson"] = avg_pearson ? ordered_json(*avg_pearson) : ordered_json(nullptr);
  j["avg_spearman"] = avg_spearman ? ordered_json(*avg_spearman) : ordered_json(nullptr);
  j["n_examples"] = n_examples;
  j["n_parse_failures"] = n_parse_failures;
  ordered_json f = ordered_json::object();
  for (const auto& [k, v] : failure_counts) f[k] = v;
  j["failure_counts"] = f;
  return j;
}

std::string MetricsReport::csv_header() {
  return "label,mae_life_time_min,mae_cpu_max,mae_ram_max,mae_disk_max,avg_pearson,"
         "avg_spearman,n_examples,n_parse_failures";
}

namespace {
std::string opt_str(const std::optional<double>& v) {
  if (!v) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", *v);
  return buf;
}
}  // namespace

std::string MetricsReport::csv_row(const std::string& label) const {
  std::string row = label;
  for (int m = 0; m < TargetMetrics::kCount; ++m) {
    row += "," + opt_str(per_metric[static_cast<size_t>(m)].mae);
  }
  row += "," + opt_str(avg_pearson) + "," + opt_str(avg_spearman);
  row += "," + std::to_string(n_examples) + "," + std::to_string(n_parse_failures);
  return row;
}

MetricsReport evaluate(const Predictor& predictor, std::span<const JobRecord> test) {
  if (test.empty()) fail(Err::EmptyInput, "evaluate: empty test set");
  MetricsReport report;
  report.n_examples = static_cast<int>(test.size());

  std::array<std::vector<double>, TargetMetrics::kCount> preds, truths;
  for (const auto& rec : test) {
    PredOutcome out = predictor(rec);
    if (out.failed) {
      ++report.n_parse_failures;
      ++report.failure_counts[failure_category_name(out.category)];
      continue;
    }
    for (int m = 0; m < TargetMetrics::kCount; ++m) {
      if (out.values[static_cast<size_t>(m)]) {
        preds[static_cast<size_t>(m)].push_back(*out.values[static_cast<size_t>(m)]);
        truths[static_cast<size_t>(m)].push_back(rec.metrics[m]);
      }
    }
  }

  std::vector<double> rs, rss;
  for (int m = 0; m < TargetMetrics::kCount; ++m) {
    auto& s = report.per_metric[static_cast<size_t>(m)];
    const auto& p = preds[static_cast<size_t>(m)];
    const auto& t = truths[static_cast<size_t>(m)];
    s.n = static_cast<int>(p.size());
    if (p.empty()) continue;
    double scale = (m == 0) ? 1.0 / 60.0 : 1.0;  // life_time: seconds -> minutes
    std::vector<double> ps(p.size()), ts(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
      ps[i] = p[i] * scale;
      ts[i] = t[i] * scale;
    }
    s.mae = mae(ps, ts);
    if (p.size() >= 2 && !is_constant(p) && !is_constant(t)) {
      s.pearson = pearson(p, t);
      s.spearman = spearman(p, t);
      rs.push_back(*s.pearson);
      rss.push_back(*s.spearman);
    }
  }
  if (!rs.empty()) {
    report.avg_pearson = stable_sum(rs) / static_cast<double>(rs.size());
    report.avg_spearman = stable_sum(rss) / static_cast<double>(rss.size());
  }
  return report;
}

Predictor make_user_request_predictor() {
  return [](const JobRecord& rec) {
    PredOutcome out;
    out.values = user_request_predict(rec).values;
    return out;
  };
}

Predictor make_heuristic_predictor(std::vector<JobRecord> history, int window_days) {
  auto index = std::make_shared<HeuristicIndex>(history);
  return [index, window_days](const JobRecord& rec) {
    PredOutcome out;
    if (auto peak = index->predict(rec, window_days)) {
      for (int m = 0; m < TargetMetrics::kCount; ++m) {
        out.values[static_cast<size_t>(m)] = (*peak)[m];
      }
    } else {
      // no history: fall back to the user request (life_time stays NA)
      out.values = user_request_predict(rec).values;
    }
    return out;
  };
}

}  // namespace t2r
