#include "gp/baselines.hpp"

#include <algorithm>
#include <fstream>

#include "gp/error.hpp"
#include "gp/rng.hpp"
#include "json.hpp"

namespace gp {

namespace {

using nlohmann::json;

ScoreSeries series_from_json(const json& doc, const std::string& origin) {
  if (!doc.is_object()) {
    fail(Errc::SchemaViolation, origin + ": score series must be an object");
  }
  ScoreSeries series;
  try {
    series.video_id = doc.at("video_id").get<std::string>();
    series.query = doc.at("query").get<std::string>();
    const std::string source = doc.at("source").get<std::string>();
    if (source == "frame") {
      series.source = ScoreSource::Frame;
    } else if (source == "segment") {
      series.source = ScoreSource::Segment;
    } else {
      fail(Errc::SchemaViolation, origin + ": source must be frame|segment");
    }
    for (const auto& p : doc.at("points")) {
      ScorePoint point;
      point.time_s = p.at("time_s").get<double>();
      point.score = p.at("score").get<double>();
      if (p.contains("end_s")) point.end_s = p["end_s"].get<double>();
      series.points.push_back(point);
    }
  } catch (const json::exception& e) {
    fail(Errc::SchemaViolation, origin + ": " + e.what());
  }
  for (std::size_t i = 1; i < series.points.size(); ++i) {
    if (series.points[i].time_s <= series.points[i - 1].time_s) {
      fail(Errc::SchemaViolation,
           origin + ": score times must be strictly increasing");
    }
  }
  return series;
}

std::vector<ScoreSeries> series_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::MissingFile, path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    fail(Errc::SchemaViolation, path.string() + ": " + e.what());
  }
  std::vector<ScoreSeries> out;
  if (doc.is_array()) {
    for (const auto& item : doc) {
      out.push_back(series_from_json(item, path.string()));
    }
  } else {
    out.push_back(series_from_json(doc, path.string()));
  }
  return out;
}

}  // namespace

TimeSpan draw_random_span(std::mt19937_64& rng, double duration_s) {
  double a = uniform_real(rng, 0.0, duration_s);
  double b = uniform_real(rng, 0.0, duration_s);
  while (a == b) b = uniform_real(rng, 0.0, duration_s);
  if (a > b) std::swap(a, b);
  return TimeSpan{a, b};
}

TimeSpan random_baseline(double duration_s, std::uint64_t seed) {
  if (duration_s <= 0.0) fail(Errc::NonPositiveDuration, "random baseline");
  std::mt19937_64 rng(seed);
  return draw_random_span(rng, duration_s);
}

TimeSpan complete_baseline(double duration_s) {
  if (duration_s <= 0.0) fail(Errc::NonPositiveDuration, "complete baseline");
  return TimeSpan{0.0, duration_s};
}

TimeSpan threshold_baseline(const ScoreSeries& series, double epsilon,
                            double duration_s) {
  if (series.points.empty()) {
    fail(Errc::EmptyInput, "empty score series for video " + series.video_id);
  }
  if (epsilon <= 0.0) fail(Errc::InvalidConfig, "epsilon must be positive");

  // Earliest global maximum.
  std::size_t best = 0;
  for (std::size_t i = 1; i < series.points.size(); ++i) {
    if (series.points[i].score > series.points[best].score) best = i;
  }
  const double max_score = series.points[best].score;
  const double start = series.points[best].time_s;

  double end = duration_s;
  for (std::size_t i = best + 1; i < series.points.size(); ++i) {
    if (series.points[i].score <= max_score - epsilon) {
      end = series.points[i].time_s;
      break;
    }
  }

  const double clamped_start = std::clamp(start, 0.0, duration_s);
  const double clamped_end = std::clamp(end, clamped_start, duration_s);
  return TimeSpan{clamped_start, clamped_end};
}

RandomBaselineRun random_baseline_run(const Dataset& dataset, int repetitions,
                                      std::uint64_t seed) {
  if (repetitions < 1) fail(Errc::InvalidConfig, "repetitions must be >= 1");

  std::vector<TimeSpan> gts;
  gts.reserve(dataset.queries.size());
  for (const auto& q : dataset.queries) {
    if (!q.ground_truth) {
      fail(Errc::InvalidConfig,
           "query without ground truth: " + q.query);
    }
    gts.push_back(*q.ground_truth);
  }

  RandomBaselineRun run;
  for (int rep = 0; rep < repetitions; ++rep) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(rep)));
    std::vector<PredictionRecord> records;
    records.reserve(dataset.queries.size());
    for (const auto& q : dataset.queries) {
      const VideoRecord& video = dataset.videos.at(q.video_id);
      PredictionRecord record;
      record.video_id = q.video_id;
      record.query = q.query;
      record.answer = draw_random_span(rng, video.duration_s);
      records.push_back(std::move(record));
    }
    run.per_repetition.push_back(evaluate(records, gts));
    if (rep == 0) run.first_repetition_records = std::move(records);
  }
  run.averaged = mean_report(run.per_repetition);
  return run;
}

MetricsReport random_baseline_report(const Dataset& dataset, int repetitions,
                                     std::uint64_t seed) {
  return random_baseline_run(dataset, repetitions, seed).averaged;
}

std::vector<ScoreSeries> load_score_series(const std::filesystem::path& path) {
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<ScoreSeries> out;
    for (const auto& f : files) {
      auto loaded = series_from_file(f);
      out.insert(out.end(), std::make_move_iterator(loaded.begin()),
                 std::make_move_iterator(loaded.end()));
    }
    return out;
  }
  return series_from_file(path);
}

}  // namespace gp
