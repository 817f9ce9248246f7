#include <algorithm>
#include <cmath>

#include "mpv/sched/scheduler.h"

namespace mpv {
namespace {

struct WaterPath {
  uint32_t index;  // into the snapshot vector
  double owd_ms;
  double abw_bps;
  double budget_pkts = 0;
};

}  // namespace

std::optional<std::vector<uint32_t>> SflScheduler::Assign(
    const std::vector<PacketToSchedule>& packets, std::vector<PathSnapshot>& snapshots) {
  std::vector<WaterPath> paths;
  for (uint32_t i = 0; i < snapshots.size(); ++i) {
    if (snapshots[i].abw_bps == 0) continue;
    // Aggregate one-way delay: the wire estimate plus the drain time of
    // packets already waiting locally, so a loaded path floats upward.
    double local_ms = snapshots[i].pacing_rate_bps
                          ? static_cast<double>(snapshots[i].pending_bytes) * 8000.0 /
                                static_cast<double>(snapshots[i].pacing_rate_bps)
                          : 0.0;
    paths.push_back(
        WaterPath{i, snapshots[i].owd_ms + local_ms, static_cast<double>(snapshots[i].abw_bps)});
  }
  if (paths.empty()) return std::nullopt;
  std::sort(paths.begin(), paths.end(), [](const WaterPath& a, const WaterPath& b) {
    if (a.owd_ms != b.owd_ms) return a.owd_ms < b.owd_ms;
    return a.index < b.index;
  });

  std::vector<uint32_t> out;
  out.reserve(packets.size());
  if (paths.size() == 1) {
    out.assign(packets.size(), paths[0].index);
    return out;
  }

  uint64_t total_bytes = 0;
  for (const auto& p : packets) total_bytes += p.size_bytes;
  double lead_len = packets.front().size_bytes;

  // Raise the level from the largest OWD in steps that buy the slowest
  // path one more packet, until the budgets cover the batch.
  double step_ms = lead_len * 8.0 * 1000.0 / paths.back().abw_bps;
  double base_ms = paths.back().owd_ms;
  for (uint64_t i = 0;; ++i) {
    double level_ms = base_ms + static_cast<double>(i) * step_ms;
    double water_bytes = 0;
    for (auto& p : paths) {
      double bytes = std::max(0.0, (level_ms - p.owd_ms) * p.abw_bps / 8000.0);
      p.budget_pkts = std::floor(bytes / lead_len);  // packets are indivisible
      water_bytes += bytes;
    }
    if (water_bytes >= static_cast<double>(total_bytes)) break;
  }

  // Deal in OWD order while budgets last; the slowest path absorbs any
  // flooring shortfall.
  size_t cursor = 0;
  for (size_t k = 0; k < packets.size(); ++k) {
    while (cursor + 1 < paths.size() && paths[cursor].budget_pkts < 1.0) cursor++;
    out.push_back(paths[cursor].index);
    paths[cursor].budget_pkts -= 1.0;
  }
  return out;
}

}  // namespace mpv
