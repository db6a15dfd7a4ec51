#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gp/core.hpp"
#include "gp/evaluation.hpp"
#include "gp/ingest.hpp"

namespace gp {

enum class ScoreSource { Frame, Segment };

struct ScorePoint {
  double time_s = 0.0;               // frame time, or segment start
  std::optional<double> end_s;       // present for segment-sourced series
  double score = 0.0;
};

// Precomputed query-to-video similarity curve; embedding inference happens
// outside this artifact.
struct ScoreSeries {
  std::string video_id;
  std::string query;
  ScoreSource source = ScoreSource::Frame;
  std::vector<ScorePoint> points;  // times strictly increasing
};

// Two independent uniforms on [0, duration], sorted; exact ties resample.
TimeSpan draw_random_span(std::mt19937_64& rng, double duration_s);
TimeSpan random_baseline(double duration_s, std::uint64_t seed);

// The trivial full-video prediction [0, T].
TimeSpan complete_baseline(double duration_s);

// Start at the earliest global score maximum; end at the first later point
// whose score has dropped by at least epsilon from the maximum, or at the
// video end when no such point exists.
TimeSpan threshold_baseline(const ScoreSeries& series, double epsilon,
                            double duration_s);

struct RandomBaselineRun {
  MetricsReport averaged;
  std::vector<MetricsReport> per_repetition;
  std::vector<PredictionRecord> first_repetition_records;
};

// Full evaluation per repetition with derived per-repetition seeds, then the
// arithmetic mean of every metric across repetitions.
RandomBaselineRun random_baseline_run(const Dataset& dataset, int repetitions,
                                      std::uint64_t seed);
MetricsReport random_baseline_report(const Dataset& dataset, int repetitions,
                                     std::uint64_t seed);

// Score-series file: a single series object or an array of them; a directory
// is scanned for *.json files.
std::vector<ScoreSeries> load_score_series(const std::filesystem::path& path);

}  // namespace gp
