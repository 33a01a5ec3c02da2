#include "t2r/serializer.hpp"

#include "t2r/codec.hpp"

namespace t2r {

const std::string kSystemPrompt =
    "Estimate resources for the cloud job below. Reply with JSON "
    "{\"life_time\": s, \"cpu_max\": vCPU, \"ram_max\": GB, \"disk_max\": GB}, "
    "each value a scientific-notation string.\n";

std::string serialize_job(const JobConfig& cfg) {
  cfg.validate();
  JobConfig canon = cfg;
  canon.canonicalize();
  return canon.to_json().dump();
}

std::string serialize_targets(const TargetMetrics& y) {
  y.validate();
  std::string s = "{";
  for (int m = 0; m < TargetMetrics::kCount; ++m) {
    if (m) s += ", ";
    s += '"';
    s += TargetMetrics::name(m);
    s += "\": \"";
    s += encode_number(y[m]).render();
    s += '"';
  }
  s += '}';
  return s;
}

PromptBundle make_bundle(const JobConfig& cfg, const TargetMetrics* y) {
  PromptBundle b;
  b.system_prompt = kSystemPrompt;
  b.job_text = serialize_job(cfg);
  b.target_text = y ? serialize_targets(*y) : std::string();
  return b;
}

TokenSequence build_prompt(const JobConfig& cfg, const TargetMetrics* y, int max_len) {
  PromptBundle b = make_bundle(cfg, y);
  TokenSequence sys = encode(b.system_prompt);
  TokenSequence job = encode(b.job_text);
  TokenSequence tgt = encode(b.target_text);

  // BOS + system + target (+EOS when training) are fixed; only job text may shrink.
  size_t fixed = 1 + sys.size() + tgt.size() + (y ? 1 : 0);
  if (max_len <= 0 || fixed > static_cast<size_t>(max_len)) {
    fail(Err::ContextOverflow,
         "prompt plus targets alone need " + std::to_string(fixed) + " tokens, max_len " +
             std::to_string(max_len));
  }
  size_t job_budget = static_cast<size_t>(max_len) - fixed;
  size_t job_keep = std::min(job.size(), job_budget);

  TokenSequence seq;
  seq.ids.reserve(fixed + job_keep);
  seq.push(Vocabulary::kBos, false);
  for (int32_t id : sys.ids) seq.push(id, false);
  for (size_t i = 0; i < job_keep; ++i) seq.push(job.ids[i], false);
  if (y) {
    for (int32_t id : tgt.ids) seq.push(id, true);
    seq.push(Vocabulary::kEos, true);
  }
  return seq;
}

}  // namespace t2r
