#include "gp/parsing.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace gp {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kExcerptLimit = 200;

std::string excerpt_of(std::string_view text) {
  return std::string(text.substr(0, kExcerptLimit));
}

Collapse collapse(CollapseReason reason, std::string_view text) {
  return Collapse{reason, excerpt_of(text)};
}

std::string_view trimmed(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Numbers may arrive quoted ("179"); coerce a full-string numeric literal.
std::optional<double> coerce_number(const ordered_json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const std::string s{trimmed(value.get<std::string>())};
    if (s.empty()) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) return std::nullopt;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
  }
  return std::nullopt;
}

std::string narrative_value(const ordered_json& object, std::string_view key) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string()) return {};
  return it->get<std::string>();
}

// The reply's partition keys carry the model's own timestamps ("before 179",
// "between 179 and 329"), so match by prefix, first occurrence wins.
std::string narrative_by_prefix(const ordered_json& object,
                                std::string_view prefix) {
  for (auto it = object.begin(); it != object.end(); ++it) {
    if (it.key().rfind(prefix, 0) == 0 && it->is_string()) {
      return it->get<std::string>();
    }
  }
  return {};
}

}  // namespace

const char* collapse_reason_name(CollapseReason reason) {
  switch (reason) {
    case CollapseReason::NoJsonFound: return "NoJsonFound";
    case CollapseReason::UnparseableJson: return "UnparseableJson";
    case CollapseReason::MissingAnswerKey: return "MissingAnswerKey";
    case CollapseReason::NonNumericAnswer: return "NonNumericAnswer";
    case CollapseReason::WrongArity: return "WrongArity";
    case CollapseReason::StartAfterEnd: return "StartAfterEnd";
    case CollapseReason::StartBeyondDuration: return "StartBeyondDuration";
    case CollapseReason::NegativeTimestamp: return "NegativeTimestamp";
  }
  return "Unknown";
}

std::optional<CollapseReason> collapse_reason_from_name(std::string_view name) {
  static constexpr CollapseReason all[] = {
      CollapseReason::NoJsonFound,        CollapseReason::UnparseableJson,
      CollapseReason::MissingAnswerKey,   CollapseReason::NonNumericAnswer,
      CollapseReason::WrongArity,         CollapseReason::StartAfterEnd,
      CollapseReason::StartBeyondDuration, CollapseReason::NegativeTimestamp,
  };
  for (CollapseReason r : all) {
    if (name == collapse_reason_name(r)) return r;
  }
  return std::nullopt;
}

std::optional<std::string> extract_json_object(std::string_view text) {
  // Earliest-starting balanced object wins; an unbalanced candidate falls
  // through to the next '{' so prose with a stray brace still parses.
  for (std::size_t start = 0; start < text.size(); ++start) {
    if (text[start] != '{') continue;
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < text.size(); ++i) {
      const char c = text[i];
      if (in_string) {
        if (escaped) {
          escaped = false;
        } else if (c == '\\') {
          escaped = true;
        } else if (c == '"') {
          in_string = false;
        }
        continue;
      }
      if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}') {
        --depth;
        if (depth == 0) {
          return std::string(text.substr(start, i - start + 1));
        }
      }
    }
  }
  return std::nullopt;
}

ParseOutcome parse_answer(std::string_view text, double duration_s,
                          bool cot_enabled) {
  const auto object_text = extract_json_object(text);
  if (!object_text) return collapse(CollapseReason::NoJsonFound, text);

  const ordered_json doc =
      ordered_json::parse(*object_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return collapse(CollapseReason::UnparseableJson, *object_text);
  }

  const auto answer_it = doc.find("answer");
  if (answer_it == doc.end()) {
    return collapse(CollapseReason::MissingAnswerKey, *object_text);
  }
  if (!answer_it->is_array() || answer_it->size() != 2) {
    return collapse(CollapseReason::WrongArity, *object_text);
  }

  const auto start = coerce_number((*answer_it)[0]);
  const auto end = coerce_number((*answer_it)[1]);
  if (!start || !end) {
    return collapse(CollapseReason::NonNumericAnswer, *object_text);
  }
  if (*start < 0.0 || *end < 0.0) {
    return collapse(CollapseReason::NegativeTimestamp, *object_text);
  }
  if (*start > *end) {
    return collapse(CollapseReason::StartAfterEnd, *object_text);
  }
  if (*start >= duration_s) {
    return collapse(CollapseReason::StartBeyondDuration, *object_text);
  }

  ParsedAnswer parsed;
  parsed.answer = TimeSpan{*start, std::min(*end, duration_s)};
  if (cot_enabled) {
    parsed.summary = narrative_value(doc, "summary");
    parsed.comment = narrative_value(doc, "comment");
    parsed.query_echo = narrative_value(doc, "query");
    parsed.before = narrative_by_prefix(doc, "before");
    parsed.between = narrative_by_prefix(doc, "between");
    parsed.after = narrative_by_prefix(doc, "after");
  }
  return parsed;
}

std::string to_json_text(const ParsedAnswer& answer) {
  ordered_json doc;
  doc["summary"] = answer.summary;
  doc["comment"] = answer.comment;
  doc["query"] = answer.query_echo;
  doc["before X"] = answer.before;
  doc["between X and Y"] = answer.between;
  doc["after Y"] = answer.after;
  doc["answer"] = {answer.answer.start_s, answer.answer.end_s};
  return doc.dump();
}

}  // namespace gp
