#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gp {

// Closed interval of seconds. The shared currency for moments, chapters,
// scenes and predictions. Zero-length spans are legal degenerate inputs.
struct TimeSpan {
  double start_s = 0.0;
  double end_s = 0.0;

  double length() const { return end_s - start_s; }
  bool valid() const { return start_s >= 0.0 && start_s <= end_s; }
  bool operator==(const TimeSpan&) const = default;
};

// Intersection-over-union of two spans. Total on valid inputs: when the
// union has zero length the result is 1 for identical points, 0 otherwise.
double iou(const TimeSpan& a, const TimeSpan& b);

// |pred.start_s - gt.start_s|. Collapsed predictions never reach this
// function; the evaluator assigns them an infinite distance directly.
double start_distance(const TimeSpan& pred, const TimeSpan& gt);

// One ASR sentence with its time extent.
struct TranscriptSegment {
  TimeSpan span;
  std::string text;
  bool operator==(const TranscriptSegment&) const = default;
};

// One frame caption anchored at the sampled frame's time.
struct Caption {
  double time_s = 0.0;
  std::string text;
  bool operator==(const Caption&) const = default;
};

struct VideoRecord {
  std::string id;
  std::string title;
  double duration_s = 0.0;
  std::vector<TranscriptSegment> transcripts;  // sorted, non-overlapping
  std::vector<Caption> captions;               // sorted by time
  std::vector<TimeSpan> scenes;                // sorted, non-overlapping
  bool operator==(const VideoRecord&) const = default;
};

struct QueryInstance {
  std::string video_id;
  std::string query;
  std::optional<TimeSpan> ground_truth;  // absent in pure-inference mode
  bool operator==(const QueryInstance&) const = default;
};

}  // namespace gp
