#include "mpv/run/compare.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "mpv/metrics/metrics.h"
#include "mpv/run/config.h"

namespace mpv {
namespace {

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace

SummaryInfo ReadSummary(const std::string& dir) {
  std::string path = dir + "/summary.csv";
  std::ifstream in(path);
  if (!in) throw ConfigError("missing summary: " + path);

  std::string line;
  std::getline(in, line);
  if (line != Metrics::kSummarySchema) {
    throw ConfigError("schema mismatch in " + path + " (got '" + line + "', expected '" +
                      Metrics::kSummarySchema + "')");
  }
  std::getline(in, line);
  std::map<std::string, size_t> col;
  {
    auto headers = SplitCsv(line);
    for (size_t i = 0; i < headers.size(); ++i) col[headers[i]] = i;
  }
  auto field = [&](const std::vector<std::string>& row, const char* name) -> std::string {
    auto it = col.find(name);
    if (it == col.end() || it->second >= row.size()) return "";
    return row[it->second];
  };

  SummaryInfo info;
  info.dir = dir;
  while (std::getline(in, line)) {
    auto row = SplitCsv(line);
    if (row.size() < 2) continue;
    info.scenario = row[0];
    if (field(row, "row") == "pooled") {
      info.pooled_loss_pct = std::atof(field(row, "loss_pct").c_str());
      info.pooled_owd_ms = std::atof(field(row, "avg_owd_ms").c_str());
    } else if (field(row, "row") == "frames") {
      info.has_frames = true;
      info.frames_generated = std::strtoull(field(row, "frames_generated").c_str(), nullptr, 10);
      info.frames_delivered = std::strtoull(field(row, "frames_delivered").c_str(), nullptr, 10);
      info.frames_dropped = std::strtoull(field(row, "frames_dropped").c_str(), nullptr, 10);
      info.avg_frame_delay_ms = std::atof(field(row, "avg_frame_delay_ms").c_str());
    }
  }
  return info;
}

std::string CompareTable(const std::vector<std::string>& dirs) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-28s %12s %10s %10s %16s\n", "scenario", "pooled_owd", "loss_pct",
                "frames", "avg_frame_delay");
  os << buf;
  for (const auto& dir : dirs) {
    SummaryInfo s = ReadSummary(dir);
    std::string frames = s.has_frames ? std::to_string(s.frames_delivered) + "/" + std::to_string(s.frames_generated)
                                      : "-";
    std::string delay = "-";
    if (s.has_frames) {
      std::snprintf(buf, sizeof(buf), "%.2f ms", s.avg_frame_delay_ms);
      delay = buf;
    }
    std::snprintf(buf, sizeof(buf), "%-28s %9.2f ms %9.2f%% %10s %16s\n", s.scenario.c_str(),
                  s.pooled_owd_ms, s.pooled_loss_pct, frames.c_str(), delay.c_str());
    os << buf;
  }
  return os.str();
}

}  // namespace mpv
