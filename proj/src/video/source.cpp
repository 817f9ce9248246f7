#include "mpv/video/source.h"

#include <algorithm>

namespace mpv {

VideoFrame FrameSource::Generate(SimTime now, uint64_t target_bitrate_bps) {
  VideoFrame frame;
  frame.fid = next_fid_++;
  frame.gen_ts = now;
  frame.is_key = (frame.fid - 1) % params_.key_frame_interval == 0;

  uint64_t rate = std::min(target_bitrate_bps, params_.max_bitrate_bps);
  uint64_t bytes = rate * params_.FrameIntervalUs() / (8 * kUsPerSec);
  if (frame.is_key) bytes = static_cast<uint64_t>(bytes * params_.key_size_multiplier);
  if (bytes == 0) bytes = mtu_bytes_;  // bootstrap before any estimate
  frame.size_bytes = static_cast<uint32_t>(bytes);
  return frame;
}

std::vector<Segment> Packetize(const VideoFrame& frame, uint32_t mtu_bytes) {
  MPV_REQUIRE(frame.size_bytes > 0, "Packetize: empty frame");
  uint32_t total = (frame.size_bytes + mtu_bytes - 1) / mtu_bytes;
  std::vector<Segment> segments;
  segments.reserve(total);
  uint32_t remaining = frame.size_bytes;
  for (uint32_t i = 0; i < total; ++i) {
    Segment seg;
    seg.fid = frame.fid;
    seg.total_segments = total;
    seg.index = i;
    seg.payload_bytes = std::min(mtu_bytes, remaining);
    seg.is_key = frame.is_key;
    seg.gen_ts = frame.gen_ts;
    remaining -= seg.payload_bytes;
    segments.push_back(seg);
  }
  return segments;
}

}  // namespace mpv
