#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gp/core.hpp"

namespace gp {

// One scored prediction. A missing answer means the reply collapsed; the
// reason string keeps the parser taxonomy name, or a transport annotation
// for failures that never produced a reply.
struct PredictionRecord {
  std::string video_id;
  std::string query;
  std::optional<TimeSpan> answer;
  std::optional<std::string> collapse_reason;
  std::string raw_response;
  std::optional<std::int64_t> prompt_tokens_est;

  bool collapsed() const { return !answer.has_value(); }
  bool operator==(const PredictionRecord&) const = default;
};

// Aggregate metrics, all percentages in [0,100].
//   r_at_iou[m]  — share of predictions with IoU strictly above m
//   r_at_sec[n]  — share of predictions whose start lies within n seconds
//   miou         — mean IoU over all records, collapses counted as 0
//   cr           — share of collapsed records
struct MetricsReport {
  std::size_t n = 0;
  std::map<double, double> r_at_iou;
  double miou = 0.0;
  std::map<int, double> r_at_sec;
  double cr = 0.0;
};

inline constexpr std::array<double, 4> kDefaultIouThresholds{0.3, 0.5, 0.7,
                                                             0.9};
inline constexpr std::array<int, 4> kDefaultSecThresholds{1, 3, 5, 10};

// records[i] is scored against gts[i]. Collapsed records contribute IoU 0.0
// and an infinite start distance. Throws LengthMismatch / EmptyInput.
MetricsReport evaluate(
    const std::vector<PredictionRecord>& records,
    const std::vector<TimeSpan>& gts,
    std::span<const double> iou_thresholds = kDefaultIouThresholds,
    std::span<const int> sec_thresholds = kDefaultSecThresholds);

// Pointwise arithmetic mean; reports must share n and thresholds.
MetricsReport mean_report(const std::vector<MetricsReport>& reports);

// Canonical JSON with fixed key order, percentages rounded to 2 decimals.
void write_report(const MetricsReport& report, const std::filesystem::path&);
MetricsReport read_report(const std::filesystem::path& path);
std::string format_report(const MetricsReport& report);

double round2(double v);

// Predictions log, one self-contained JSON object per line.
std::string to_jsonl_line(const PredictionRecord& record);
PredictionRecord prediction_from_jsonl(const std::string& line);
std::vector<PredictionRecord> read_predictions_log(
    const std::filesystem::path& path);

}  // namespace gp
