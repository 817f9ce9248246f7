#ifndef MPV_LINK_H
#define MPV_LINK_H

#include <cstdint>
#include <functional>

#include "mpv/common.h"
#include "mpv/packet.h"
#include "mpv/simulator.h"

namespace mpv {

struct LinkConfig {
  uint64_t capacity_bps = 0;
  SimTime prop_delay_us = 0;
  uint64_t queue_capacity_bytes = 0;
};

// Queue capacity follows the "BW x ms" product convention: bytes that the
// link serializes in queue_ms at full rate.
inline uint64_t QueueBytesFromMs(uint64_t capacity_bps, uint64_t queue_ms) {
  return capacity_bps * queue_ms / 8000;
}

struct LinkCounters {
  uint64_t enqueued_packets = 0;
  uint64_t enqueued_bytes = 0;
  uint64_t dropped_packets = 0;
  uint64_t dropped_bytes = 0;
  uint64_t delivered_packets = 0;
  uint64_t delivered_bytes = 0;
};

// Point-to-point link with a DropTail byte queue. A packet occupies the
// queue from acceptance until its serialization completes, then spends
// prop_delay on the wire. FIFO order, back-to-back serialization.
class DropTailLink {
 public:
  using DeliverFn = std::function<void(const WirePacket&)>;
  using DropFn = std::function<void(const WirePacket&)>;

  DropTailLink(Simulator& sim, const LinkConfig& config) : sim_(sim), config_(config) {}

  void SetDeliverFn(DeliverFn fn) { deliver_ = std::move(fn); }
  void SetDropFn(DropFn fn) { on_drop_ = std::move(fn); }

  // Returns false and drops when the packet does not fit in the queue.
  bool Enqueue(const WirePacket& pkt);

  SimTime SerializationDelay(uint32_t bytes) const {
    uint64_t bits = static_cast<uint64_t>(bytes) * 8;
    return (bits * kUsPerSec + config_.capacity_bps - 1) / config_.capacity_bps;
  }

  const LinkConfig& config() const { return config_; }
  const LinkCounters& counters() const { return counters_; }
  uint64_t occupancy_bytes() const { return occupancy_bytes_; }
  uint64_t on_wire_bytes() const { return on_wire_bytes_; }

 private:
  Simulator& sim_;
  LinkConfig config_;
  DeliverFn deliver_;
  DropFn on_drop_;
  LinkCounters counters_;
  uint64_t occupancy_bytes_ = 0;  // accepted, serialization not yet complete
  uint64_t on_wire_bytes_ = 0;    // serialized, propagating
  SimTime busy_until_ = 0;        // when the serializer frees up
};

// Reverse/feedback channel: same one-way propagation delay as the forward
// link, ample capacity, never drops. Carries receiver reports only.
class FeedbackPipe {
 public:
  using DeliverFn = std::function<void(const Feedback&)>;

  FeedbackPipe(Simulator& sim, SimTime prop_delay_us) : sim_(sim), prop_delay_us_(prop_delay_us) {}

  void SetDeliverFn(DeliverFn fn) { deliver_ = std::move(fn); }

  void Send(const Feedback& fb) {
    sim_.ScheduleIn(prop_delay_us_, [this, fb] {
      if (deliver_) deliver_(fb);
    });
  }

 private:
  Simulator& sim_;
  SimTime prop_delay_us_;
  DeliverFn deliver_;
};

}  // namespace mpv

#endif  // MPV_LINK_H
