#ifndef MPV_VIDEO_SESSION_RECEIVER_H
#define MPV_VIDEO_SESSION_RECEIVER_H

#include <map>
#include <optional>
#include <vector>

#include "mpv/metrics/metrics.h"
#include "mpv/packet.h"
#include "mpv/simulator.h"
#include "mpv/video/source.h"

namespace mpv {

// Session-level reassembly buffer. Frames are delivered the moment their
// segment bitmap completes, in whatever fid order that happens. Incomplete
// non-key frames are dropped after the configured wait; key frames wait
// for retransmission indefinitely.
class SessionReceiver {
 public:
  SessionReceiver(Simulator& sim, const VideoParams& params, Metrics& metrics)
      : sim_(sim), params_(params), metrics_(metrics) {}

  void OnSegment(SimTime now, const Segment& seg, uint32_t path_index);

  uint64_t duplicates_ignored() const { return duplicates_ignored_; }
  uint64_t frames_delivered() const { return frames_delivered_; }
  uint64_t frames_dropped() const { return frames_dropped_; }

 private:
  enum class FrameState { kPending, kDelivered, kDropped };

  struct Reassembly {
    std::vector<bool> have;
    uint32_t have_count = 0;
    uint64_t bytes = 0;
    uint32_t paths_mask = 0;
    SimTime first_arrival = 0;
    SimTime gen_ts = 0;
    bool is_key = false;
    FrameState state = FrameState::kPending;
  };

  void ExpireFrame(uint64_t fid);

  Simulator& sim_;
  VideoParams params_;
  Metrics& metrics_;
  std::map<uint64_t, Reassembly> frames_;
  uint64_t duplicates_ignored_ = 0;
  uint64_t frames_delivered_ = 0;
  uint64_t frames_dropped_ = 0;
};

}  // namespace mpv

#endif  // MPV_VIDEO_SESSION_RECEIVER_H
