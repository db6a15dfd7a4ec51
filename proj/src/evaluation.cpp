#include "gp/evaluation.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "gp/error.hpp"
#include "json.hpp"

namespace gp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string threshold_key(double m) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", m);
  return buf;
}

}  // namespace

MetricsReport evaluate(const std::vector<PredictionRecord>& records,
                       const std::vector<TimeSpan>& gts,
                       std::span<const double> iou_thresholds,
                       std::span<const int> sec_thresholds) {
  if (records.size() != gts.size()) {
    fail(Errc::LengthMismatch,
         "records (" + std::to_string(records.size()) + ") vs ground truths (" +
             std::to_string(gts.size()) + ")");
  }
  if (records.empty()) fail(Errc::EmptyInput, "no records to evaluate");

  const std::size_t n = records.size();
  std::vector<double> ious(n);
  std::vector<double> dists(n);
  std::size_t collapses = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (records[i].collapsed()) {
      ious[i] = 0.0;
      dists[i] = std::numeric_limits<double>::infinity();
      ++collapses;
    } else {
      ious[i] = iou(*records[i].answer, gts[i]);
      dists[i] = start_distance(*records[i].answer, gts[i]);
    }
  }

  MetricsReport report;
  report.n = n;
  for (double m : iou_thresholds) {
    std::size_t hits = 0;
    for (double v : ious) {
      if (v > m) ++hits;  // strictly larger than the threshold
    }
    report.r_at_iou[m] = 100.0 * static_cast<double>(hits) / n;
  }
  double iou_sum = 0.0;
  for (double v : ious) iou_sum += v;
  report.miou = 100.0 * iou_sum / n;
  for (int s : sec_thresholds) {
    std::size_t hits = 0;
    for (double d : dists) {
      if (d <= static_cast<double>(s)) ++hits;
    }
    report.r_at_sec[s] = 100.0 * static_cast<double>(hits) / n;
  }
  report.cr = 100.0 * static_cast<double>(collapses) / n;
  return report;
}

MetricsReport mean_report(const std::vector<MetricsReport>& reports) {
  if (reports.empty()) fail(Errc::EmptyInput, "no reports to average");
  MetricsReport mean = reports.front();
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const MetricsReport& r = reports[i];
    if (r.n != mean.n || r.r_at_iou.size() != mean.r_at_iou.size() ||
        r.r_at_sec.size() != mean.r_at_sec.size()) {
      fail(Errc::LengthMismatch, "reports disagree on shape");
    }
    for (auto& [m, v] : mean.r_at_iou) v += r.r_at_iou.at(m);
    for (auto& [s, v] : mean.r_at_sec) v += r.r_at_sec.at(s);
    mean.miou += r.miou;
    mean.cr += r.cr;
  }
  const double k = static_cast<double>(reports.size());
  for (auto& [m, v] : mean.r_at_iou) v /= k;
  for (auto& [s, v] : mean.r_at_sec) v /= k;
  mean.miou /= k;
  mean.cr /= k;
  return mean;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

void write_report(const MetricsReport& report,
                  const std::filesystem::path& path) {
  ordered_json doc;
  doc["n"] = report.n;
  ordered_json r_iou;
  for (const auto& [m, v] : report.r_at_iou) r_iou[threshold_key(m)] = round2(v);
  doc["r_at_iou"] = std::move(r_iou);
  doc["miou"] = round2(report.miou);
  ordered_json r_sec;
  for (const auto& [s, v] : report.r_at_sec) {
    r_sec[std::to_string(s)] = round2(v);
  }
  doc["r_at_sec"] = std::move(r_sec);
  doc["cr"] = round2(report.cr);

  std::ofstream out(path);
  if (!out) fail(Errc::IoError, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) fail(Errc::IoError, "short write to " + path.string());
}

MetricsReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot read " + path.string());
  ordered_json doc;
  try {
    in >> doc;
  } catch (const ordered_json::parse_error& e) {
    fail(Errc::IoError, "invalid report JSON: " + std::string(e.what()));
  }
  MetricsReport report;
  report.n = doc.at("n").get<std::size_t>();
  for (const auto& [k, v] : doc.at("r_at_iou").items()) {
    report.r_at_iou[std::stod(k)] = v.get<double>();
  }
  report.miou = doc.at("miou").get<double>();
  for (const auto& [k, v] : doc.at("r_at_sec").items()) {
    report.r_at_sec[std::stoi(k)] = v.get<double>();
  }
  report.cr = doc.at("cr").get<double>();
  return report;
}

std::string format_report(const MetricsReport& report) {
  std::ostringstream out;
  char buf[64];
  out << "n: " << report.n << '\n';
  for (const auto& [m, v] : report.r_at_iou) {
    std::snprintf(buf, sizeof(buf), "r@%g: %.2f\n", m, v);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf), "mIoU: %.2f\n", report.miou);
  out << buf;
  for (const auto& [s, v] : report.r_at_sec) {
    std::snprintf(buf, sizeof(buf), "r@%ds: %.2f\n", s, v);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf), "cr: %.2f\n", report.cr);
  out << buf;
  return out.str();
}

std::string to_jsonl_line(const PredictionRecord& record) {
  ordered_json doc;
  doc["video_id"] = record.video_id;
  doc["query"] = record.query;
  if (record.answer) {
    doc["answer"] = {record.answer->start_s, record.answer->end_s};
  } else {
    doc["answer"] = nullptr;
  }
  doc["collapsed"] = record.collapsed();
  if (record.collapse_reason) doc["collapse_reason"] = *record.collapse_reason;
  if (!record.raw_response.empty()) doc["raw_response"] = record.raw_response;
  if (record.prompt_tokens_est) {
    doc["prompt_tokens_est"] = *record.prompt_tokens_est;
  }
  return doc.dump();
}

PredictionRecord prediction_from_jsonl(const std::string& line) {
  const ordered_json doc =
      ordered_json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    fail(Errc::SchemaViolation, "unparseable predictions-log line");
  }
  PredictionRecord record;
  try {
    record.video_id = doc.at("video_id").get<std::string>();
    record.query = doc.at("query").get<std::string>();
    const auto& answer = doc.at("answer");
    if (!answer.is_null()) {
      if (!answer.is_array() || answer.size() != 2) {
        fail(Errc::SchemaViolation, "log answer must be null or [start, end]");
      }
      record.answer = TimeSpan{answer[0].get<double>(), answer[1].get<double>()};
    }
    if (doc.contains("collapse_reason")) {
      record.collapse_reason = doc["collapse_reason"].get<std::string>();
    }
    if (doc.contains("raw_response")) {
      record.raw_response = doc["raw_response"].get<std::string>();
    }
    if (doc.contains("prompt_tokens_est")) {
      record.prompt_tokens_est = doc["prompt_tokens_est"].get<std::int64_t>();
    }
    const bool collapsed_flag = doc.at("collapsed").get<bool>();
    if (collapsed_flag != record.collapsed()) {
      fail(Errc::SchemaViolation, "collapsed flag contradicts answer field");
    }
  } catch (const ordered_json::exception& e) {
    fail(Errc::SchemaViolation,
         "predictions-log line: " + std::string(e.what()));
  }
  return record;
}

std::vector<PredictionRecord> read_predictions_log(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::MissingFile, path.string());
  std::vector<PredictionRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    records.push_back(prediction_from_jsonl(line));
  }
  return records;
}

}  // namespace gp
