#include "mpv/cc/aimd.h"

#include <algorithm>
#include <string>

namespace mpv {

void AimdSender::OnPacketSent(SimTime now, uint64_t seq, uint32_t payload_bytes) {
  MPV_REQUIRE(seq > last_sent_seq_, "AIMD OnPacketSent: non-increasing seq " + std::to_string(seq));
  outstanding_.emplace(seq, Sent{payload_bytes, now});
  inflight_bytes_ += payload_bytes;
  last_sent_seq_ = seq;
}

void AimdSender::OnAck(SimTime now, uint64_t seq) {
  auto it = outstanding_.find(seq);
  if (it == outstanding_.end()) return;
  uint32_t bytes = it->second.bytes;
  SimTime rtt = now - it->second.sent_ts;
  outstanding_.erase(it);
  inflight_bytes_ -= bytes;

  last_rtt_us_ = rtt;
  if (min_rtt_us_ == 0 || rtt < min_rtt_us_) min_rtt_us_ = rtt;
  srtt_us_ = srtt_us_ == 0.0 ? static_cast<double>(rtt) : 0.875 * srtt_us_ + 0.125 * static_cast<double>(rtt);

  if (cwnd_bytes_ < ssthresh_bytes_) {
    cwnd_bytes_ += bytes;  // slow start
    in_slow_start_ = true;
  } else {
    in_slow_start_ = false;
    cwnd_bytes_ += static_cast<double>(k_.mtu_bytes) * bytes / cwnd_bytes_;
  }
}

void AimdSender::OnPacketLost(SimTime, uint64_t seq) {
  auto it = outstanding_.find(seq);
  if (it == outstanding_.end()) return;
  inflight_bytes_ -= it->second.bytes;
  outstanding_.erase(it);

  if (seq > recovery_end_seq_) {
    cwnd_bytes_ = std::max(cwnd_bytes_ / 2.0, 2.0 * k_.mtu_bytes);
    ssthresh_bytes_ = cwnd_bytes_;
    recovery_end_seq_ = last_sent_seq_;
  }
}

}  // namespace mpv
