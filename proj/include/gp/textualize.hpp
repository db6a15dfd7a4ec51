#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gp/core.hpp"

namespace gp {

// Integer frame times handed to an external captioner.
struct FramePlan {
  std::vector<std::int64_t> times_s;  // strictly increasing
  bool operator==(const FramePlan&) const = default;
};

struct ModalityFlags {
  bool speech = true;
  bool visual = true;
  bool operator==(const ModalityFlags&) const = default;
};

// Compressed textual form of one (video, query) pair, ready for prompt
// assembly. Line formats are bit-exact: "S-E: TEXT" and "T: TEXT".
struct TextualizedTask {
  std::string title;
  std::string query;
  std::vector<std::string> transcript_lines;
  std::vector<std::string> caption_lines;
  double duration_s = 0.0;
  ModalityFlags modality_flags;
  bool operator==(const TextualizedTask&) const = default;
};

// Midpoint frame of every transcript segment and every scene, deduplicated.
// When fewer than min_frames survive, the plan is replaced by
// min(min_frames, floor(duration)+1) uniformly spaced integer seconds.
FramePlan plan_frame_times(const std::vector<TranscriptSegment>& transcripts,
                           const std::vector<TimeSpan>& scenes,
                           double duration_s, int min_frames);

std::vector<std::string> render_transcript_lines(
    const std::vector<TranscriptSegment>& transcripts);

std::vector<std::string> render_caption_lines(
    const std::vector<Caption>& captions);

// Assembles title, query and rendered lines honoring the modality flags.
// Throws BothModalitiesDisabled when neither channel is enabled.
TextualizedTask textualize_task(const VideoRecord& video,
                                const std::string& query, ModalityFlags flags);

void write_frame_plan(const FramePlan& plan, const std::string& video_id,
                      const std::filesystem::path& path);

}  // namespace gp
