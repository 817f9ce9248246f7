#include "mpv/link.h"

namespace mpv {

bool DropTailLink::Enqueue(const WirePacket& pkt) {
  if (occupancy_bytes_ + pkt.size_bytes > config_.queue_capacity_bytes) {
    counters_.dropped_packets++;
    counters_.dropped_bytes += pkt.size_bytes;
    if (on_drop_) on_drop_(pkt);
    return false;
  }
  counters_.enqueued_packets++;
  counters_.enqueued_bytes += pkt.size_bytes;
  occupancy_bytes_ += pkt.size_bytes;

  SimTime now = sim_.Now();
  SimTime start = std::max(now, busy_until_);
  SimTime tx_done = start + SerializationDelay(pkt.size_bytes);
  busy_until_ = tx_done;

  sim_.ScheduleAt(tx_done, [this, pkt] {
    occupancy_bytes_ -= pkt.size_bytes;
    on_wire_bytes_ += pkt.size_bytes;
  });
  sim_.ScheduleAt(tx_done + config_.prop_delay_us, [this, pkt] {
    on_wire_bytes_ -= pkt.size_bytes;
    counters_.delivered_packets++;
    counters_.delivered_bytes += pkt.size_bytes;
    if (deliver_) deliver_(pkt);
  });
  return true;
}

}  // namespace mpv
