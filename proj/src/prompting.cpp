#include "gp/prompting.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <variant>

#include "gp/error.hpp"
#include "gp/parsing.hpp"
#include "json.hpp"

namespace gp {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kTaskDescription =
    "You can analyze the correlations between a video and a query, and locate "
    "the video segment that matches the query. You are given: (1) Video title "
    "(2) Query (3) Speech transcription, with temporal information in the "
    "format of [START-TIMESTAMP]-[END-TIMESTAMP]: [TRANSCRIPTION] (4) Visual "
    "caption, with temporal information in the format of [TIMESTAMP]: "
    "[CAPTION]. You should give the answer in [X, Y] format where X, Y are "
    "the start and end timestamps of the matching segment.";

constexpr std::string_view kGlobalUnderstanding = "You summarize the video.";

constexpr std::string_view kNoiseEvaluation =
    "We note that the visual caption might be quite NOISY. Now you comment if "
    "the visual captions are helpful enough for localization. You can give up "
    "information from captions if you think some of them are wrong.";

constexpr std::string_view kPartitionUnderstanding =
    "You analyze the video content before X, between X and Y, and after Y, "
    "respectively. After that, you give the answer [X, Y].";

constexpr std::string_view kFormatComplianceFull =
    "Please use JSON format of {\"summary\": \"...\" (you summarize the whole "
    "video), \"comment\": \"...\" (you evaluate effectiveness of visual "
    "captions), \"query\": \"...\" (the query input), \"before X\": \"...\" "
    "(you summarize video before X), \"between X and Y\": \"...\" (you "
    "summarize video between X and Y), \"after Y\": \"...\" (you summarize "
    "video after Y), \"answer\": [X, Y]}.";

constexpr std::string_view kFormatComplianceMinimal =
    "Please use JSON format of {\"answer\": [X, Y]}.";

constexpr std::string_view kAnswerRegularization =
    "We ensure there does exist ONE moment matching the query and X is no "
    "more than Y.";

constexpr std::string_view kPlagiarismProhibition =
    "You MUST NOT just copy the answer given by the example! X and Y should "
    "be replaced by the real start and end timestamps of the moment you find "
    "in videos.";

void append_lines(std::string& out, const std::vector<std::string>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    out += lines[i];
  }
}

// Sections (2)-(4): the task content, reused verbatim for the worked
// example's <INPUT> block. Modality flags silence whole blocks.
std::string render_task_body(const TextualizedTask& task,
                             ModalityFlags flags) {
  std::string out;
  out += "Video title: ";
  out += task.title;
  out += "\n\nQuery: ";
  out += task.query;
  if (flags.speech && !task.transcript_lines.empty()) {
    out += "\n\nSpeech transcriptions:\n";
    append_lines(out, task.transcript_lines);
  }
  if (flags.visual && !task.caption_lines.empty()) {
    out += "\n\nVisual captions:\n";
    append_lines(out, task.caption_lines);
  }
  return out;
}

// With chain-of-thought off the example must demonstrate the minimal
// template, so its full answer is reduced to {"answer": [X, Y]}.
std::string example_output_for(const IclExample& example, bool enable_cot) {
  if (enable_cot) return example.output_answer_text;
  const ParseOutcome outcome =
      parse_answer(example.output_answer_text, example.input_task.duration_s,
                   /*cot_enabled=*/false);
  const auto* parsed = std::get_if<ParsedAnswer>(&outcome);
  if (!parsed) {
    fail(Errc::InvalidConfig, "worked example output does not parse");
  }
  ordered_json doc;
  doc["answer"] = {parsed->answer.start_s, parsed->answer.end_s};
  return doc.dump();
}

std::string assemble(const TextualizedTask& task, const PromptConfig& config) {
  std::string out;
  out += kTaskDescription;
  out += "\n\n";
  out += render_task_body(task, task.modality_flags);
  if (config.enable_cot) {
    out += "\n\n";
    out += kGlobalUnderstanding;
    out += "\n\n";
    out += kNoiseEvaluation;
    out += "\n\n";
    out += kPartitionUnderstanding;
  }
  out += "\n\n";
  out += config.enable_cot ? kFormatComplianceFull : kFormatComplianceMinimal;
  out += "\n\n";
  out += kAnswerRegularization;
  if (config.enable_icl) {
    out += "\n\n";
    out += kPlagiarismProhibition;
    out += "\n\nHere is a solved example.\n<INPUT>=>\n";
    out += render_task_body(config.icl_example.input_task,
                            task.modality_flags);
    out += "\n<OUTPUT>=>\n";
    out += example_output_for(config.icl_example, config.enable_cot);
    out += "\n\nNow you solve the following.";
  }
  return out;
}

std::vector<std::string> keep_every_kth(const std::vector<std::string>& lines,
                                        std::size_t k) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < lines.size(); i += k) kept.push_back(lines[i]);
  return kept;
}

// First ceil(c/2) lines plus last floor(c/2): the middle goes first, the
// first and last lines always survive.
std::vector<std::string> keep_symmetric(const std::vector<std::string>& lines,
                                        std::size_t c) {
  if (c >= lines.size()) return lines;
  const std::size_t head = (c + 1) / 2;
  const std::size_t tail = c / 2;
  std::vector<std::string> kept(lines.begin(),
                                lines.begin() + static_cast<long>(head));
  kept.insert(kept.end(), lines.end() - static_cast<long>(tail), lines.end());
  return kept;
}

// Shared thinning schedule: captions first, then transcripts. Returns the
// largest variant accepted by `fits`, or the maximally thinned task.
TextualizedTask thin_until(const TextualizedTask& task,
                           const std::function<bool(const TextualizedTask&)>& fits,
                           bool* fitted) {
  *fitted = true;
  if (fits(task)) return task;

  TextualizedTask current = task;
  if (!task.caption_lines.empty()) {
    for (std::size_t k = 2;; ++k) {
      current.caption_lines = keep_every_kth(task.caption_lines, k);
      if (fits(current)) return current;
      if (current.caption_lines.size() <= 1) break;
    }
    current.caption_lines.clear();
    if (fits(current)) return current;
  }

  if (current.transcript_lines.size() > 2) {
    const std::vector<std::string> full = current.transcript_lines;
    for (std::size_t c = full.size() - 1; c >= 2; --c) {
      current.transcript_lines = keep_symmetric(full, c);
      if (fits(current)) return current;
      if (c == 2) break;
    }
  }
  *fitted = fits(current);
  return current;
}

std::int64_t task_body_tokens(const TextualizedTask& task) {
  return estimate_tokens(render_task_body(task, task.modality_flags));
}

void validate_example(const IclExample& example) {
  const ParseOutcome outcome =
      parse_answer(example.output_answer_text, example.input_task.duration_s,
                   /*cot_enabled=*/true);
  if (!std::holds_alternative<ParsedAnswer>(outcome)) {
    fail(Errc::InvalidConfig,
         "worked example output must decode with no collapse");
  }
}

}  // namespace

IclExample default_icl_example() {
  IclExample example;
  TextualizedTask& task = example.input_task;
  task.title = "Five Habits of Great Conversation";
  task.query = "Habit 2: Build other people up";
  task.duration_s = 540.0;
  task.transcript_lines = {
      "0-7: While watching clips from my last Game of Thrones video, I "
      "noticed how often hosts interrupt their guests.",
      "7-41: So today we are counting down the habits that make people enjoy "
      "talking to you.",
      "41-96: Habit one: listen actively. Keep eye contact and let the other "
      "person finish their thought.",
      "96-179: We watch a clip where the host repeats the guest's words back "
      "before answering.",
      "179-245: Habit two: build other people up. A sincere compliment costs "
      "nothing and opens every door.",
      "245-329: In this clip the host praises the guest's latest work and the "
      "whole conversation relaxes.",
      "329-414: Habit three: admit mistakes quickly. People trust hosts who "
      "correct themselves on air.",
      "414-540: We recap the habits and preview the next episode.",
  };
  task.caption_lines = {
      "5: A woman with long blonde hair sitting in front of a camera.",
      "60: A man talking to a woman on a television stage.",
      "130: Two people sitting at a round table with microphones.",
      "210: A woman smiling while a man gestures with his hands.",
      "290: An audience clapping in a bright studio.",
      "370: A man in a suit looking at cue cards.",
      "480: A woman waving goodbye to the camera.",
  };
  example.output_answer_text =
      "{\"summary\": \"A talk-show host counts down conversation habits, "
      "illustrating each one with clips from interviews.\", \"comment\": "
      "\"These captions describe a scene where people talk in a show, but "
      "provide limited information to understand the video.\", \"query\": "
      "\"Habit 2: Build other people up\", \"before 179\": \"Talk about "
      "active listening as the first habit, with a clip of a host repeating a "
      "guest's words.\", \"between 179 and 329\": \"Talk about building other "
      "people up with sincere compliments, shown in a clip where the host "
      "praises the guest.\", \"after 329\": \"Talk about admitting mistakes "
      "quickly, followed by a recap of all the habits.\", \"answer\": [179, "
      "329]}";
  validate_example(example);
  return example;
}

IclExample load_icl_example(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::MissingFile, path.string());
  ordered_json doc;
  try {
    in >> doc;
  } catch (const ordered_json::parse_error& e) {
    fail(Errc::SchemaViolation, path.string() + ": " + e.what());
  }
  IclExample example;
  try {
    const auto& input = doc.at("input");
    example.input_task.title = input.at("title").get<std::string>();
    example.input_task.query = input.at("query").get<std::string>();
    example.input_task.transcript_lines =
        input.at("transcript_lines").get<std::vector<std::string>>();
    example.input_task.caption_lines =
        input.at("caption_lines").get<std::vector<std::string>>();
    example.input_task.duration_s = input.at("duration_s").get<double>();
    example.output_answer_text = doc.at("output").get<std::string>();
  } catch (const ordered_json::exception& e) {
    fail(Errc::SchemaViolation, path.string() + ": " + e.what());
  }
  validate_example(example);
  return example;
}

std::int64_t estimate_tokens(std::string_view text) {
  return static_cast<std::int64_t>((text.size() + 3) / 4);
}

TextualizedTask truncate_to_budget(const TextualizedTask& task,
                                   std::int64_t budget_remaining) {
  if (budget_remaining <= 0) {
    fail(Errc::InvalidConfig, "budget_remaining must be positive");
  }
  bool fitted = false;
  return thin_until(
      task,
      [budget_remaining](const TextualizedTask& t) {
        return task_body_tokens(t) <= budget_remaining;
      },
      &fitted);
}

PromptBundle build_prompt(const TextualizedTask& task,
                          const PromptConfig& config) {
  if (config.token_budget <= 0) {
    fail(Errc::InvalidConfig, "token budget must be positive");
  }
  if (config.enable_icl) validate_example(config.icl_example);

  const auto fits = [&](const TextualizedTask& t) {
    return estimate_tokens(assemble(t, config)) <= config.token_budget;
  };

  bool fitted = false;
  const TextualizedTask final_task = thin_until(task, fits, &fitted);
  if (!fitted) {
    fail(Errc::BudgetUnsatisfiable,
         "prompt exceeds " + std::to_string(config.token_budget) +
             " tokens even after maximal truncation");
  }

  PromptBundle bundle;
  bundle.rendered_prompt = assemble(final_task, config);
  bundle.estimated_tokens = estimate_tokens(bundle.rendered_prompt);
  bundle.truncation_applied = final_task != task;
  return bundle;
}

}  // namespace gp
