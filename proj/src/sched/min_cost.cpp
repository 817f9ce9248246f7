#include "mpv/sched/scheduler.h"

namespace mpv {

double MinCostScheduler::PathCostMs(const PathSnapshot& s) {
  double queue_ms = static_cast<double>(s.pending_bytes) * 8000.0 / static_cast<double>(s.pacing_rate_bps);
  return s.rtt_ms / 2.0 + queue_ms;
}

std::optional<uint32_t> MinCostScheduler::ArgMinCost(const std::vector<PathSnapshot>& snapshots) {
  std::optional<uint32_t> best;
  double best_cost = 0;
  for (uint32_t i = 0; i < snapshots.size(); ++i) {
    if (snapshots[i].pacing_rate_bps == 0) continue;
    double cost = PathCostMs(snapshots[i]);
    if (!best || cost < best_cost) {
      best = i;
      best_cost = cost;
    }
  }
  return best;
}

std::optional<std::vector<uint32_t>> MinCostScheduler::Assign(
    const std::vector<PacketToSchedule>& packets, std::vector<PathSnapshot>& snapshots) {
  if (!ArgMinCost(snapshots)) return std::nullopt;
  std::vector<uint32_t> out;
  out.reserve(packets.size());
  for (const auto& pkt : packets) {
    uint32_t j = *ArgMinCost(snapshots);
    out.push_back(j);
    snapshots[j].pending_bytes += pkt.size_bytes;
  }
  return out;
}

}  // namespace mpv
