#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gp/evaluation.hpp"
#include "gp/ingest.hpp"
#include "gp/llm_gateway.hpp"

namespace gp {

struct RunConfig {
  std::filesystem::path manifest_path;
  std::filesystem::path out_dir;
  std::string model_name = "gpt-3.5-turbo-16k";
  std::string api_base;  // empty: GP_API_BASE env, else the provider default
  std::string api_key;   // empty: GP_API_KEY env
  double temperature = 0.0;
  int concurrency = 4;
  int min_frames = 100;
  int token_budget = 14000;
  int max_output_tokens = 1024;
  bool no_cot = false;
  bool no_icl = false;
  bool no_speech = false;
  bool no_visual = false;
  std::optional<std::filesystem::path> mock_script_path;
  std::optional<std::filesystem::path> icl_example_path;
  std::optional<std::filesystem::path> dump_prompts_dir;
  std::uint64_t seed = 0;
  bool keep_raw_responses = true;
};

struct RunOutcome {
  std::vector<PredictionRecord> records;  // in manifest query order
  std::optional<MetricsReport> report;    // present when all queries carry gts
  std::filesystem::path log_path;
  std::optional<std::filesystem::path> report_path;
};

// textualize -> truncate -> prompt -> complete -> parse for every query,
// fanned out over at most `concurrency` workers. Records append to the log
// as they finish, so partial output survives interruption; transport
// failures after retries become annotated collapses and the run continues.
// client_override bypasses gateway construction (tests).
RunOutcome run_pipeline(const RunConfig& config,
                        CompletionClient* client_override = nullptr);

// Aligns log records with the dataset's queries by (video_id, query) and
// evaluates. Throws LengthMismatch when the records do not match the query
// set one-to-one, InvalidConfig when a query lacks a ground truth.
MetricsReport evaluate_log_against_dataset(
    const std::vector<PredictionRecord>& records, const Dataset& dataset);

}  // namespace gp
