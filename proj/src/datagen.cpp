#include "t2r/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace t2r {

namespace {

// Factor tables, part of ground-truth version 1 (see datagen.hpp).
// Reference rows (analyze, cpu_core, read_only, success) are exactly 1.0 so a
// unit-factor config reproduces the tool base cost bit-for-bit.
struct FactorRow {
  const char* key;
  std::array<double, 4> f;  // life, cpu, ram, disk
};

constexpr FactorRow kActionFactors[] = {
    {"build", {0.7, 1.2, 0.9, 1.3}},
    {"simulate", {1.3, 1.0, 1.1, 0.8}},
    {"verify", {1.6, 0.9, 1.4, 1.0}},
    {"analyze", {1.0, 1.0, 1.0, 1.0}},
};

constexpr FactorRow kAppFactors[] = {
    {"cpu_core", {1.0, 1.0, 1.0, 1.0}},
    {"gpu_block", {1.5, 1.0, 1.6, 1.2}},
    {"dsp_unit", {0.9, 0.9, 0.8, 0.8}},
    {"io_fabric", {0.7, 0.8, 0.7, 1.1}},
    {"mem_ctrl", {1.1, 1.0, 1.3, 1.0}},
};

constexpr FactorRow kCacheFactors[] = {
    {"none", {1.3, 1.0, 1.0, 0.8}},
    {"read_only", {1.0, 1.0, 1.0, 1.0}},
    {"read_write", {0.85, 1.0, 1.05, 1.2}},
    {"aggressive", {0.7, 1.0, 1.1, 1.5}},
};

constexpr FactorRow kStateFactors[] = {
    {"success", {1.0, 1.0, 1.0, 1.0}},
    {"fail", {0.3, 1.0, 0.9, 0.5}},
};

template <size_t N>
const std::array<double, 4>& lookup(const FactorRow (&table)[N], const std::string& key,
                                    const char* what) {
  for (const auto& row : table) {
    if (key == row.key) return row.f;
  }
  fail(Err::BadConfig, std::string("ground_truth: unknown ") + what + " '" + key + "'");
}

std::mt19937_64 stream(uint64_t seed, uint64_t a, uint64_t b = 0) {
  return std::mt19937_64(derive_seed(seed, a, b));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs) {
  return xs[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(xs.size()) - 1))];
}

/// Weighted choice; weights need not normalize.
int pick_weighted(std::mt19937_64& rng, const std::vector<double>& w) {
  std::discrete_distribution<int> d(w.begin(), w.end());
  return d(rng);
}

constexpr int64_t kEpochBase = 1767225600;  // 2026-01-01T00:00:00Z

const std::vector<std::string> kDesignNames = {
    "alu",    "fpu",   "decode", "fetch", "l2cache", "noc",   "ddrphy", "serdes",
    "dmac",   "crypt", "vproc",  "mmu",   "rob",     "lsq",   "bpu",    "pcie",
};

const std::vector<std::string> kActions = {"build", "simulate", "verify", "analyze"};
const std::vector<std::string> kApps = {"cpu_core", "gpu_block", "dsp_unit", "io_fabric",
                                        "mem_ctrl"};

struct DesignFile {
  std::string name;
  std::string app;
  double base_size = 0.0;
  std::array<int, 4> tool_for_action{};  // catalog index per action
};

std::vector<DesignFile> make_file_pool(const GeneratorSpec& spec,
                                       const std::vector<ToolCost>& catalog) {
  int n_files = std::max(8, spec.n_jobs / 25);
  std::vector<DesignFile> pool;
  pool.reserve(static_cast<size_t>(n_files));
  for (int i = 0; i < n_files; ++i) {
    auto rng = stream(spec.seed, 1, static_cast<uint64_t>(i));
    DesignFile f;
    const std::string& base = kDesignNames[static_cast<size_t>(i) % kDesignNames.size()];
    f.app = pick(rng, kApps);
    f.name = "designs/" + f.app + "/" + base + "_" + std::to_string(i) + ".v";
    double lo = std::log(static_cast<double>(spec.design_size_range.min));
    double hi = std::log(static_cast<double>(spec.design_size_range.max));
    f.base_size = std::exp(uniform(rng, lo, hi));
    for (int a = 0; a < 4; ++a) {
      f.tool_for_action[static_cast<size_t>(a)] =
          uniform_int(rng, 0, static_cast<int>(catalog.size()) - 1);
    }
    pool.push_back(std::move(f));
  }
  return pool;
}

std::string hex_string(std::mt19937_64& rng, int len) {
  static const char* hexset = "0123456789abcdef";
  std::string s;
  s.reserve(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) s.push_back(hexset[uniform_int(rng, 0, 15)]);
  return s;
}

}  // namespace

const std::vector<ToolCost>& default_tool_catalog() {
  static const std::vector<ToolCost> catalog = {
      {"lintcheck", "2.1.0", {120, 1, 2, 1}},
      {"dvsim", "5.4.2", {900, 4, 8, 20}},
      {"powermodel", "1.9.3", {600, 2, 6, 8}},
      {"drcfill", "4.0.1", {1500, 4, 16, 60}},
      {"timingsig", "3.3.7", {1800, 8, 24, 30}},
      {"synthopt", "7.2.0", {2400, 8, 32, 40}},
      {"formalver", "2.8.5", {3600, 12, 48, 25}},
      {"placeroute", "6.1.4", {7200, 16, 64, 120}},
  };
  return catalog;
}

void GeneratorSpec::validate() const {
  if (n_jobs < 1) fail(Err::BadConfig, "n_jobs must be >= 1");
  if (span_days < 1) fail(Err::BadConfig, "span_days must be >= 1");
  if (noise_sigma < 0) fail(Err::BadConfig, "noise_sigma must be >= 0");
  if (heuristic_coverage < 0 || heuristic_coverage > 1) {
    fail(Err::BadConfig, "heuristic_coverage must lie in [0,1]");
  }
  if (design_size_range.min < 1 || design_size_range.max < design_size_range.min) {
    fail(Err::BadConfig, "design_size_range invalid");
  }
  if (filler_entries.min < 0 || filler_entries.max < filler_entries.min) {
    fail(Err::BadConfig, "filler_entries invalid");
  }
}

ordered_json GeneratorSpec::to_json() const {
  ordered_json j;
  j["seed"] = seed;
  j["n_jobs"] = n_jobs;
  j["span_days"] = span_days;
  j["design_size_min"] = design_size_range.min;
  j["design_size_max"] = design_size_range.max;
  j["noise_sigma"] = noise_sigma;
  j["heuristic_coverage"] = heuristic_coverage;
  j["filler_min"] = filler_entries.min;
  j["filler_max"] = filler_entries.max;
  ordered_json tools = ordered_json::array();
  for (const auto& t : (tool_catalog.empty() ? default_tool_catalog() : tool_catalog)) {
    ordered_json tj;
    tj["name"] = t.name;
    tj["version"] = t.version;
    tj["base"] = t.base.to_json();
    tools.push_back(tj);
  }
  j["tool_catalog"] = tools;
  return j;
}

TargetMetrics ground_truth(const JobConfig& cfg, const std::vector<ToolCost>& catalog) {
  const ToolCost* tool = nullptr;
  for (const auto& t : catalog) {
    if (t.name == cfg.exec_spec.tool) {
      tool = &t;
      break;
    }
  }
  if (!tool) fail(Err::BadConfig, "ground_truth: unknown tool '" + cfg.exec_spec.tool + "'");

  std::string size_tag = cfg.tag("design_size");
  if (size_tag.empty()) fail(Err::BadConfig, "ground_truth: missing design_size tag");
  double design_size = 0.0;
  try {
    design_size = std::stod(size_tag);
  } catch (const std::exception&) {
    fail(Err::BadConfig, "ground_truth: design_size tag not numeric");
  }

  const auto& f_action = lookup(kActionFactors, cfg.tag("action_type"), "action_type");
  const auto& f_app = lookup(kAppFactors, cfg.tag("application_type"), "application_type");
  const auto& f_cache = lookup(kCacheFactors, cfg.caching_policy, "caching_policy");
  const auto& f_state = lookup(kStateFactors, cfg.expected_state, "expected_state");

  double size_factor = std::pow(design_size / 1000.0, 1.5);
  double f_priority = 0.8 + 0.4 * (static_cast<double>(cfg.priority) / 200.0);
  double k = static_cast<double>(cfg.replication);

  TargetMetrics gt;
  for (int m = 0; m < 4; ++m) {
    double f_repl = (m == 0) ? 1.0 + 0.1 * (k - 1.0) : k;
    // Normative factor order; see kGroundTruthVersion.
    gt[m] = tool->base[m] * size_factor * f_action[static_cast<size_t>(m)] *
            f_app[static_cast<size_t>(m)] * f_priority * f_repl *
            f_cache[static_cast<size_t>(m)] * f_state[static_cast<size_t>(m)];
  }
  return gt;
}

std::vector<JobRecord> generate_dataset(const GeneratorSpec& spec) {
  spec.validate();
  const std::vector<ToolCost>& catalog =
      spec.tool_catalog.empty() ? default_tool_catalog() : spec.tool_catalog;
  std::vector<DesignFile> pool = make_file_pool(spec, catalog);

  std::vector<JobRecord> records;
  records.reserve(static_cast<size_t>(spec.n_jobs));
  for (int i = 0; i < spec.n_jobs; ++i) {
    // Counter-based per-record stream: generation order never shifts the draws.
    auto rng = stream(spec.seed, 2, static_cast<uint64_t>(i));

    const DesignFile& file = pool[static_cast<size_t>(
        uniform_int(rng, 0, static_cast<int>(pool.size()) - 1))];
    int action_idx = uniform_int(rng, 0, 3);
    const ToolCost& tool =
        catalog[static_cast<size_t>(file.tool_for_action[static_cast<size_t>(action_idx)])];

    JobConfig cfg;
    cfg.source_file_name = file.name;
    int design_size =
        std::max(1, static_cast<int>(std::lround(file.base_size * uniform(rng, 0.85, 1.18))));
    cfg.tags = {{"action_type", kActions[static_cast<size_t>(action_idx)]},
                {"application_type", file.app},
                {"design_size", std::to_string(design_size)}};
    cfg.priority = uniform_int(rng, kPriorityMin, kPriorityMax);

    static const std::vector<std::string> kOptLevels = {"O0", "O1", "O2", "O3"};
    static const std::vector<std::string> kNodes = {"n5", "n7", "n12"};
    cfg.build_config = {{"opt_level", pick(rng, kOptLevels)}, {"target_node", pick(rng, kNodes)}};
    int fillers = spec.filler_entries.max > 0
                      ? uniform_int(rng, spec.filler_entries.min, spec.filler_entries.max)
                      : 0;
    for (int f = 0; f < fillers; ++f) {
      char key[16];
      std::snprintf(key, sizeof(key), "param_%03d", f);
      cfg.build_config.emplace_back(key, hex_string(rng, 8));
    }

    cfg.exec_spec.command =
        "run_" + tool.name + " --design " + file.name + " --seed " +
        std::to_string(uniform_int(rng, 0, 9999));
    cfg.exec_spec.tool = tool.name;
    cfg.exec_spec.tool_version = tool.version;

    int n_deps = uniform_int(rng, 0, 3);
    for (int d = 0; d < n_deps && i > 0; ++d) {
      char dep[32];
      std::snprintf(dep, sizeof(dep), "job-%06d", uniform_int(rng, 0, i - 1));
      cfg.dependencies.push_back(dep);
    }
    cfg.caching_policy =
        kCachingPolicies[static_cast<size_t>(pick_weighted(rng, {0.2, 0.5, 0.2, 0.1}))];
    cfg.expected_state = uniform(rng, 0, 1) < 0.9 ? "success" : "fail";
    static const int kReplChoices[] = {1, 2, 4, 8};
    cfg.replication = kReplChoices[pick_weighted(rng, {0.55, 0.25, 0.15, 0.05})];
    cfg.canonicalize();

    JobRecord rec;
    rec.config = cfg;
    TargetMetrics gt = ground_truth(cfg, catalog);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int m = 0; m < 4; ++m) {
      double eps = spec.noise_sigma > 0 ? gauss(rng) * spec.noise_sigma : 0.0;
      rec.metrics[m] = gt[m] * std::exp(eps);
    }
    // Users request resources against expectation, not the realized run: a mild
    // factor for heuristic-covered jobs, a big over-provision guess otherwise.
    bool heuristic_covered = uniform(rng, 0, 1) < spec.heuristic_coverage;
    rec.requested.life_time = 0.0;
    for (int m = 1; m < 4; ++m) {
      double over = heuristic_covered ? uniform(rng, 1.05, 1.6) : uniform(rng, 2.0, 20.0);
      rec.requested[m] = gt[m] * over;
    }

    rec.timestamp =
        kEpochBase + static_cast<int64_t>(uniform(rng, 0, spec.span_days * 86400.0));
    char id[32];
    std::snprintf(id, sizeof(id), "job-%06d", i);
    rec.job_id = id;
    records.push_back(std::move(rec));
  }
  return records;
}

DatasetSplit split_random(const std::vector<JobRecord>& records, uint64_t seed) {
  size_t n = records.size();
  if (n == 0) fail(Err::EmptyInput, "split_random: no records");
  size_t n_train = n * 8 / 10;
  size_t n_val = n * 9 / 10 - n_train;
  size_t n_test = n - n_train - n_val;
  if (n_train == 0 || n_val == 0 || n_test == 0) {
    fail(Err::EmptySplit, "split_random: a split part would be empty");
  }
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  std::mt19937_64 rng(derive_seed(seed, 3));
  std::shuffle(idx.begin(), idx.end(), rng);

  DatasetSplit out;
  for (size_t i = 0; i < n; ++i) {
    const JobRecord& r = records[idx[i]];
    if (i < n_train) {
      out.train.push_back(r);
    } else if (i < n_train + n_val) {
      out.val.push_back(r);
    } else {
      out.test.push_back(r);
    }
  }
  return out;
}

TemporalSplit split_temporal(const std::vector<JobRecord>& records, int train_days,
                             int window_days) {
  if (records.empty()) fail(Err::EmptyInput, "split_temporal: no records");
  if (train_days < 1 || window_days < 1) fail(Err::BadConfig, "split_temporal: bad days");

  int64_t t0 = records[0].timestamp;
  int64_t t_max = records[0].timestamp;
  for (const auto& r : records) {
    t0 = std::min(t0, r.timestamp);
    t_max = std::max(t_max, r.timestamp);
  }
  int64_t train_end = t0 + static_cast<int64_t>(train_days) * 86400;
  int64_t span_end = t_max + 1;
  int n_windows =
      static_cast<int>((span_end - train_end) / (static_cast<int64_t>(window_days) * 86400));

  TemporalSplit out;
  out.windows.resize(static_cast<size_t>(std::max(0, n_windows)));
  std::vector<JobRecord> sorted = records;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const JobRecord& a, const JobRecord& b) { return a.timestamp < b.timestamp; });
  for (const auto& r : sorted) {
    if (r.timestamp < train_end) {
      out.train.push_back(r);
    } else {
      int64_t w = (r.timestamp - train_end) / (static_cast<int64_t>(window_days) * 86400);
      if (w < n_windows) out.windows[static_cast<size_t>(w)].push_back(r);
      // records past the last full window are dropped
    }
  }
  if (out.train.empty()) fail(Err::EmptySplit, "split_temporal: train period empty");
  return out;
}

}  // namespace t2r
