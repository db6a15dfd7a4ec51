#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "gp/core.hpp"

namespace gp {

// Why a model reply failed to yield a usable prediction. Feeds the collapse
// rate metric; every reason is reachable from a crafted input.
enum class CollapseReason {
  NoJsonFound,
  UnparseableJson,
  MissingAnswerKey,
  NonNumericAnswer,
  WrongArity,
  StartAfterEnd,
  StartBeyondDuration,
  NegativeTimestamp,
};

const char* collapse_reason_name(CollapseReason reason);
std::optional<CollapseReason> collapse_reason_from_name(std::string_view name);

struct Collapse {
  CollapseReason reason;
  std::string raw_excerpt;  // leading slice of the offending text
};

// Decoded reply template. Narrative fields stay empty when the model omitted
// them or chain-of-thought was disabled; only `answer` is load-bearing.
struct ParsedAnswer {
  std::string summary;
  std::string comment;
  std::string query_echo;
  std::string before;
  std::string between;
  std::string after;
  TimeSpan answer;
  bool operator==(const ParsedAnswer&) const = default;
};

using ParseOutcome = std::variant<ParsedAnswer, Collapse>;

// First balanced top-level {...} region scanning left to right, honoring
// string escapes. nullopt when the text contains no balanced object.
std::optional<std::string> extract_json_object(std::string_view text);

// Decode a free-form model reply. Requires "answer" as a 2-element numeric
// array (numeric strings are coerced); end overshoot is clamped to the video
// duration, other violations collapse. Never throws.
ParseOutcome parse_answer(std::string_view text, double duration_s,
                          bool cot_enabled);

// Canonical JSON rendering of a parsed answer; re-parsing it yields an equal
// ParsedAnswer.
std::string to_json_text(const ParsedAnswer& answer);

}  // namespace gp
