#ifndef MPV_VIDEO_SOURCE_H
#define MPV_VIDEO_SOURCE_H

#include <cstdint>
#include <vector>

#include "mpv/common.h"
#include "mpv/packet.h"

namespace mpv {

struct VideoParams {
  double frame_rate_fps = 25.0;
  uint64_t max_bitrate_bps = 2000000;
  uint32_t key_frame_interval = 100;  // every Kth frame is key
  double key_size_multiplier = 1.0;
  // Fraction of the summed path bandwidth the encoder targets. The pacers
  // spend part of their time in drain episodes and the one-MTU bucket
  // cannot burst-catch-up afterward, so generating at exactly the sum
  // accretes local backlog without bound.
  double rate_utilization = 0.95;
  SimTime sender_retention_us = MsToUs(500);  // session buffer age limit
  SimTime receiver_wait_us = MsToUs(500);     // incomplete non-key frame wait

  SimTime FrameIntervalUs() const {
    return static_cast<SimTime>(1e6 / frame_rate_fps + 0.5);
  }
};

struct VideoFrame {
  uint64_t fid = 0;
  uint32_t size_bytes = 0;
  bool is_key = false;
  SimTime gen_ts = 0;
};

// Ideal encoder: frame size tracks the requested bitrate immediately, up
// to the configured cap. A zero target yields a one-packet bootstrap frame.
class FrameSource {
 public:
  FrameSource(const VideoParams& params, uint32_t mtu_bytes) : params_(params), mtu_bytes_(mtu_bytes) {}

  VideoFrame Generate(SimTime now, uint64_t target_bitrate_bps);

  uint64_t frames_generated() const { return next_fid_ - 1; }

 private:
  VideoParams params_;
  uint32_t mtu_bytes_;
  uint64_t next_fid_ = 1;
};

// MTU-sized segments, the last one carrying the remainder.
std::vector<Segment> Packetize(const VideoFrame& frame, uint32_t mtu_bytes);

}  // namespace mpv

#endif  // MPV_VIDEO_SOURCE_H
