#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "gp/core.hpp"

namespace gp {

struct Dataset {
  std::map<std::string, VideoRecord> videos;
  std::vector<QueryInstance> queries;
  bool operator==(const Dataset&) const = default;
};

struct ChapterEntry {
  std::string title;
  double start_s = 0.0;
  bool operator==(const ChapterEntry&) const = default;
};

// One entry of the chapters source file: video metadata plus its ordered
// chapter boundaries.
struct ChaptersVideo {
  std::string video_id;
  std::string title;
  double duration_s = 0.0;
  std::vector<ChapterEntry> chapters;
  bool operator==(const ChaptersVideo&) const = default;
};

// Manifest loading. Sidecar paths resolve relative to the manifest file;
// every referenced file is loaded and all invariants are validated.
Dataset load_manifest(const std::filesystem::path& path);

// Writes the manifest plus one sidecar file per non-empty transcript,
// caption and scene list, next to the manifest. Reloading yields an equal
// Dataset.
void save_manifest(const Dataset& dataset,
                   const std::filesystem::path& manifest_path);

// Native JSON transcript or WebVTT, auto-detected by extension. Segments are
// sorted, clipped to remove overlap, and empty-text segments dropped.
std::vector<TranscriptSegment> load_transcript(
    const std::filesystem::path& path);

// Captions sorted by time; duplicates at the same integer second merge by
// keeping the first.
std::vector<Caption> load_captions(const std::filesystem::path& path);

std::vector<TimeSpan> load_scenes(const std::filesystem::path& path);

std::vector<ChaptersVideo> load_chapters(const std::filesystem::path& path);

struct BenchmarkOptions {
  double duration_lo_s = 780.0;  // 13 minutes, inclusive
  double duration_hi_s = 900.0;  // 15 minutes, inclusive
  int per_video = 3;
  std::uint64_t seed = 0;
};

// Keeps videos inside the duration window, tiles each one's chapters into
// moments (a chapter ends where the next begins, the last at the video end),
// and samples per_video chapters uniformly without replacement.
Dataset build_benchmark(const std::vector<ChaptersVideo>& chapters,
                        const BenchmarkOptions& options);

}  // namespace gp
