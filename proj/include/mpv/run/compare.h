#ifndef MPV_RUN_COMPARE_H
#define MPV_RUN_COMPARE_H

#include <string>
#include <vector>

namespace mpv {

struct SummaryInfo {
  std::string dir;
  std::string scenario;
  double pooled_loss_pct = 0;
  double pooled_owd_ms = 0;
  bool has_frames = false;
  uint64_t frames_generated = 0;
  uint64_t frames_delivered = 0;
  uint64_t frames_dropped = 0;
  double avg_frame_delay_ms = 0;
};

// Parses <dir>/summary.csv. Throws ConfigError when the file is missing or
// its schema line does not match this build.
SummaryInfo ReadSummary(const std::string& dir);

// Side-by-side table over completed run directories.
std::string CompareTable(const std::vector<std::string>& dirs);

}  // namespace mpv

#endif  // MPV_RUN_COMPARE_H
