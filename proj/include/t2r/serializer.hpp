#pragma once

#include <optional>
#include <string>

#include "t2r/job.hpp"
#include "t2r/tokenizer.hpp"

namespace t2r {

/// Fixed instruction prepended to every example. Hashed into checkpoints so
/// train and inference prompts cannot silently diverge.
extern const std::string kSystemPrompt;

/// The three prompt segments, concatenated in this order.
struct PromptBundle {
  std::string system_prompt;
  std::string job_text;
  std::string target_text;  // empty at inference
};

/// Single-line compact JSON with keys in descending-importance order.
/// Deterministic: equal configs give byte-identical output.
std::string serialize_job(const JobConfig& cfg);

/// Target JSON with quoted canonical scientific-notation values, e.g.
/// {"life_time": "1.23e+04", "cpu_max": "1.00e+00", ...}
std::string serialize_targets(const TargetMetrics& y);

PromptBundle make_bundle(const JobConfig& cfg, const TargetMetrics* y);

/// BOS ++ system prompt ++ job text ++ target text ++ EOS, with the loss mask
/// true exactly on target tokens and EOS. When the total would exceed max_len,
/// job tokens are dropped from the tail (least important end); system prompt and
/// target are never truncated. Throws ContextOverflow when they alone overflow.
/// With y == nullptr the sequence ends after the job text and the mask is all
/// false (inference shape).
TokenSequence build_prompt(const JobConfig& cfg, const TargetMetrics* y, int max_len);

}  // namespace t2r
