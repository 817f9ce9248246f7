#ifndef MPV_PACKET_H
#define MPV_PACKET_H

#include <cstdint>

#include "mpv/common.h"

namespace mpv {

// MTU-bounded slice of a video frame. Header fields (fid, total, index,
// gen_ts) ride along with the payload; the wire format is abstracted away
// and the packet size counts payload bytes only.
struct Segment {
  uint64_t fid = 0;
  uint32_t total_segments = 0;
  uint32_t index = 0;
  uint32_t payload_bytes = 0;
  bool is_key = false;
  SimTime gen_ts = 0;
};

enum class PacketKind : uint8_t {
  kMedia,    // carries a video segment
  kPadding,  // bandwidth-probe filler, discarded at the receiver
};

struct WirePacket {
  uint32_t flow_id = 0;
  uint64_t seq = 0;  // per-path transport sequence, assigned at send
  uint32_t size_bytes = 0;
  SimTime sent_ts = 0;
  PacketKind kind = PacketKind::kPadding;
  Segment segment;  // valid when kind == kMedia
};

// Per-packet receiver report, one per received data packet. Travels the
// lossless reverse pipe of the path the data packet used.
struct Feedback {
  uint32_t flow_id = 0;
  uint64_t acked_seq = 0;
  SimTime recv_ts = 0;
};

}  // namespace mpv

#endif  // MPV_PACKET_H
