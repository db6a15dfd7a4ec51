#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "gp/textualize.hpp"

namespace gp {

// The fixed worked example embedded in the prompt. Its output text must
// decode with no collapse; loaders verify that on construction.
struct IclExample {
  TextualizedTask input_task;
  std::string output_answer_text;
};

struct PromptConfig {
  bool enable_cot = true;
  bool enable_icl = true;
  IclExample icl_example;
  int token_budget = 14000;
  int min_frames = 100;
};

struct PromptBundle {
  std::string rendered_prompt;
  std::int64_t estimated_tokens = 0;
  bool truncation_applied = false;
};

// Built-in worked example (answer [179, 329]).
IclExample default_icl_example();

// { "input": { title, query, transcript_lines, caption_lines, duration_s },
//   "output": string }
IclExample load_icl_example(const std::filesystem::path& path);

// ceil(bytes / 4); a crude, deterministic, model-agnostic proxy.
std::int64_t estimate_tokens(std::string_view text);

// Thins caption lines first (keep every k-th, increasing k) until the task
// body fits, then transcript lines symmetrically from the middle outward,
// always preserving the first and last line. Best effort: may return a task
// that still exceeds the budget once nothing more can be removed.
TextualizedTask truncate_to_budget(const TextualizedTask& task,
                                   std::int64_t budget_remaining);

// Renders the full eleven-section prompt in order: task description, query,
// transcript lines, caption lines, the three chain-of-thought instructions
// (when enabled), the answer-format template, answer regularization, and the
// plagiarism warning plus worked example (when enabled). Deterministic;
// truncates the task to honor the token budget and throws
// BudgetUnsatisfiable when even the maximally truncated prompt exceeds it.
PromptBundle build_prompt(const TextualizedTask& task,
                          const PromptConfig& config);

}  // namespace gp
