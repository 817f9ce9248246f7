#ifndef MPV_FLOW_PATH_RECEIVER_H
#define MPV_FLOW_PATH_RECEIVER_H

#include <functional>

#include "mpv/link.h"
#include "mpv/metrics/metrics.h"
#include "mpv/packet.h"
#include "mpv/simulator.h"

namespace mpv {

// Receiving endpoint of one flow on one path. Records the one-way delay,
// acks every packet immediately over the feedback pipe, and forwards media
// segments to the session receiver when one is attached.
class PathReceiver {
 public:
  using MediaSink = std::function<void(SimTime now, const Segment&, uint32_t path_index)>;

  PathReceiver(Simulator& sim, uint32_t flow_id, uint32_t path_index, FeedbackPipe& feedback,
               Metrics& metrics)
      : sim_(sim), flow_id_(flow_id), path_index_(path_index), feedback_(feedback), metrics_(metrics) {}

  void SetMediaSink(MediaSink sink) { media_sink_ = std::move(sink); }

  void OnPacket(const WirePacket& pkt) {
    SimTime now = sim_.Now();
    metrics_.OnRx(flow_id_, pkt.sent_ts, now, pkt.size_bytes);
    feedback_.Send(Feedback{flow_id_, pkt.seq, now});
    if (pkt.kind == PacketKind::kMedia && media_sink_) media_sink_(now, pkt.segment, path_index_);
  }

 private:
  Simulator& sim_;
  uint32_t flow_id_;
  uint32_t path_index_;
  FeedbackPipe& feedback_;
  Metrics& metrics_;
  MediaSink media_sink_;
};

}  // namespace mpv

#endif  // MPV_FLOW_PATH_RECEIVER_H
