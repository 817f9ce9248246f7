#ifndef MPV_TOPOLOGY_H
#define MPV_TOPOLOGY_H

#include <cstdint>
#include <vector>

#include "mpv/link.h"

namespace mpv {

// One bottleneck path of the experiment network: all flows bound to the
// path share its forward DropTail queue; feedback returns on a lossless
// reverse pipe with the same propagation delay.
struct PathConfig {
  uint64_t capacity_bps = 0;
  uint64_t owd_ms = 0;
  uint64_t queue_ms = 0;

  LinkConfig ToLinkConfig() const {
    return LinkConfig{capacity_bps, MsToUs(owd_ms), QueueBytesFromMs(capacity_bps, queue_ms)};
  }
};

struct TopologySpec {
  int table = 0;
  int case_id = 0;
  std::vector<PathConfig> paths;
};

// Case rows of the two experiment tables. Table 1 is the single-bottleneck
// matrix (cases 1-9), table 3 the two-path matrix (cases 1-10). Unknown
// (table, case) raises a configuration error.
TopologySpec BuildTopology(int table, int case_id);

}  // namespace mpv

#endif  // MPV_TOPOLOGY_H
