#include "mpv/sched/scheduler.h"

namespace mpv {

std::optional<std::vector<uint32_t>> WrrScheduler::Assign(
    const std::vector<PacketToSchedule>& packets, std::vector<PathSnapshot>& snapshots) {
  uint64_t abw_sum = 0;
  for (const auto& s : snapshots) abw_sum += s.abw_bps;
  if (abw_sum == 0) return std::nullopt;

  std::vector<uint32_t> out;
  out.reserve(packets.size());
  for (size_t k = 0; k < packets.size(); ++k) {
    // Find the next path with round quota left, opening a fresh round when
    // the current one is spent. A fresh round always has a positive quota
    // somewhere because abw_sum > 0.
    for (;;) {
      if (!round_active_) {
        // path_load(i) = ceil(n * ABW_i / sum ABW)
        quota_.assign(snapshots.size(), 0);
        for (size_t i = 0; i < snapshots.size(); ++i) {
          quota_[i] =
              (static_cast<uint64_t>(round_n_) * snapshots[i].abw_bps + abw_sum - 1) / abw_sum;
        }
        cursor_ = 0;
        round_active_ = true;
      }
      while (cursor_ < quota_.size() && quota_[cursor_] == 0) cursor_++;
      if (cursor_ >= quota_.size()) {
        round_active_ = false;
        continue;
      }
      break;
    }
    out.push_back(static_cast<uint32_t>(cursor_));
    quota_[cursor_]--;
  }
  return out;
}

}  // namespace mpv
