#include "gp/textualize.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "gp/error.hpp"
#include "json.hpp"

namespace gp {

namespace {

std::int64_t floor_seconds(double t) {
  return static_cast<std::int64_t>(std::floor(t));
}

}  // namespace

FramePlan plan_frame_times(const std::vector<TranscriptSegment>& transcripts,
                           const std::vector<TimeSpan>& scenes,
                           double duration_s, int min_frames) {
  if (duration_s <= 0.0) {
    fail(Errc::NonPositiveDuration, "cannot plan frames");
  }
  if (min_frames < 1) fail(Errc::InvalidConfig, "min_frames must be >= 1");

  std::set<std::int64_t> aligned;
  for (const auto& seg : transcripts) {
    aligned.insert(floor_seconds((seg.span.start_s + seg.span.end_s) / 2.0));
  }
  for (const auto& scene : scenes) {
    aligned.insert(floor_seconds((scene.start_s + scene.end_s) / 2.0));
  }

  FramePlan plan;
  if (static_cast<int>(aligned.size()) >= min_frames) {
    plan.times_s.assign(aligned.begin(), aligned.end());
    return plan;
  }

  // Too sparse: replace with uniformly spaced integer seconds.
  const std::int64_t last = floor_seconds(duration_s);
  const std::int64_t count =
      std::min<std::int64_t>(min_frames, last + 1);
  plan.times_s.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    plan.times_s.push_back(0);
    return plan;
  }
  for (std::int64_t i = 0; i < count; ++i) {
    plan.times_s.push_back(static_cast<std::int64_t>(
        std::floor(static_cast<double>(i) * static_cast<double>(last) /
                   static_cast<double>(count - 1))));
  }
  return plan;
}

std::vector<std::string> render_transcript_lines(
    const std::vector<TranscriptSegment>& transcripts) {
  std::vector<std::string> lines;
  lines.reserve(transcripts.size());
  for (const auto& seg : transcripts) {
    lines.push_back(std::to_string(floor_seconds(seg.span.start_s)) + "-" +
                    std::to_string(floor_seconds(seg.span.end_s)) + ": " +
                    seg.text);
  }
  return lines;
}

std::vector<std::string> render_caption_lines(
    const std::vector<Caption>& captions) {
  std::vector<std::string> lines;
  lines.reserve(captions.size());
  for (const auto& cap : captions) {
    lines.push_back(std::to_string(floor_seconds(cap.time_s)) + ": " +
                    cap.text);
  }
  return lines;
}

TextualizedTask textualize_task(const VideoRecord& video,
                                const std::string& query,
                                ModalityFlags flags) {
  if (!flags.speech && !flags.visual) {
    fail(Errc::BothModalitiesDisabled,
         "nothing to ground on for video " + video.id);
  }
  TextualizedTask task;
  task.title = video.title;
  task.query = query;
  task.duration_s = video.duration_s;
  task.modality_flags = flags;
  if (flags.speech) {
    task.transcript_lines = render_transcript_lines(video.transcripts);
  }
  if (flags.visual) {
    task.caption_lines = render_caption_lines(video.captions);
  }
  return task;
}

void write_frame_plan(const FramePlan& plan, const std::string& video_id,
                      const std::filesystem::path& path) {
  nlohmann::ordered_json doc;
  doc["video_id"] = video_id;
  doc["times_s"] = plan.times_s;
  std::ofstream out(path);
  if (!out) fail(Errc::IoError, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

}  // namespace gp
