#include "mpv/cc/bbr.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace mpv {

void BbrSender::OnPacketSent(SimTime now, uint64_t seq, uint32_t payload_bytes) {
  MPV_REQUIRE(seq > last_sent_packet_,
              "OnPacketSent: seq " + std::to_string(seq) + " not above last sent " +
                  std::to_string(last_sent_packet_));
  total_sent_bytes_ += payload_bytes;
  PacketRecord rec;
  rec.bytes = payload_bytes;
  rec.sent_ts = now;
  rec.cum_sent_bytes = total_sent_bytes_;
  rec.snap_total_acked = total_acked_bytes_;
  rec.snap_last_ack_ts = last_ack_ts_;
  rec.snap_newest_acked_sent_ts = newest_acked_sent_ts_;
  rec.snap_newest_acked_cum_sent = newest_acked_cum_sent_;
  sent_packets_map_.emplace(seq, rec);
  inflight_bytes_ += payload_bytes;
  last_sent_packet_ = seq;
}

void BbrSender::OnAck(SimTime now, uint64_t seq) {
  auto it = sent_packets_map_.find(seq);
  if (it == sent_packets_map_.end()) {
    untracked_acks_++;
    return;
  }
  PacketRecord rec = it->second;
  sent_packets_map_.erase(it);

  // The original variant adopts the current sample as its new minimum when
  // the filter expires, so the flag must reflect the pre-update stamp.
  bool was_expired = min_rtt_ts_ != 0 && now - min_rtt_ts_ > k_.min_rtt_expiry_us;

  total_acked_bytes_ += rec.bytes;
  UpdateBandwidthSample(now, rec);
  UpdateRttAndInflight(now, seq, rec, was_expired);
  UpdateRound(seq);

  switch (mode_) {
    case CcMode::kStartUp:
      CheckStartupDone();
      break;
    case CcMode::kDrain:
      bdp_bytes_ = static_cast<uint64_t>(BandwidthBps() / 8.0 * MinRttOrDefault() / kUsPerSec);
      if (inflight_bytes_ < bdp_bytes_) EnterProbeBw(now);
      break;
    case CcMode::kProbeBw:
      AdvanceGainCycle(now);
      break;
    case CcMode::kProbeRtt:
      break;
  }

  if (variant_ == Variant::kDelayResponse) {
    MaybeEnterOrExitDrain(now, was_expired, CheckIfCongestion());
  } else {
    MaybeEnterOrExitProbeRttOriginal(now, was_expired);
  }
}

void BbrSender::OnPacketLost(SimTime, uint64_t seq) {
  auto it = sent_packets_map_.find(seq);
  if (it == sent_packets_map_.end()) return;
  inflight_bytes_ -= it->second.bytes;
  sent_packets_map_.erase(it);
}

void BbrSender::UpdateRttAndInflight(SimTime now, uint64_t seq, const PacketRecord& rec,
                                     bool min_filter_expired) {
  SimTime rtt = now - rec.sent_ts;
  last_rtt_us_ = rtt;
  inflight_bytes_ -= rec.bytes;

  if (variant_ == Variant::kOriginal) {
    // Keep-min-until-expired, then adopt whatever the path gives now.
    if (rtt <= min_rtt_us_ || min_rtt_us_ == 0 || min_filter_expired) {
      min_rtt_us_ = rtt;
      min_rtt_ts_ = now;
    }
  } else {
    if (rtt < min_rtt_us_ || min_rtt_us_ == 0) {
      min_rtt_us_ = rtt;
      min_rtt_ts_ = now;
    }
    if (static_cast<double>(rtt) < k_.similar_min_rtt * static_cast<double>(min_rtt_us_)) {
      min_rtt_ts_ = now;
    }
    // Samples taken during the four-packet hold carry no queueing of ours;
    // re-anchoring on their floor tracks a competitor's standing queue.
    if (probe_rtt_deep_ && mode_ == CcMode::kProbeRtt && probe_rtt_done_ts_ != 0) {
      hold_min_rtt_us_ = hold_min_rtt_us_ == 0 ? rtt : std::min(hold_min_rtt_us_, rtt);
    }
  }
  if (seq > seq_at_backoff_) {
    if (static_cast<double>(rtt) < base_line_rtt_us_) {
      base_line_rtt_us_ = static_cast<double>(rtt);
      srtt_us_ = static_cast<double>(rtt);
    }
    srtt_us_ = (1.0 - k_.alpha) * srtt_us_ + k_.alpha * static_cast<double>(rtt);
  }
}

bool BbrSender::CheckIfCongestion() const {
  if (srtt_us_ == 0.0 || std::isinf(base_line_rtt_us_)) return false;
  return mode_ == CcMode::kProbeBw && srtt_us_ > k_.beta * base_line_rtt_us_;
}

// bw = min(dSent/dSent_ts, dAcked/dAck_ts). The sent delta runs from the
// newest packet acked when this one left to this one's send; the acked
// delta runs from the ack state captured at that same moment to now. Both
// spans cover about one flight.
void BbrSender::UpdateBandwidthSample(SimTime now, const PacketRecord& rec) {
  if (rec.snap_newest_acked_sent_ts != 0 || rec.snap_newest_acked_cum_sent != 0) {
    uint64_t d_sent = rec.cum_sent_bytes - rec.snap_newest_acked_cum_sent;
    SimTime d_sent_ts = rec.sent_ts - rec.snap_newest_acked_sent_ts;
    uint64_t d_acked = total_acked_bytes_ - rec.snap_total_acked;
    SimTime ack_anchor = rec.snap_last_ack_ts ? rec.snap_last_ack_ts : rec.sent_ts;
    SimTime d_ack_ts = now - ack_anchor;
    if (d_sent_ts > 0 && d_ack_ts > 0) {
      double send_rate = static_cast<double>(d_sent) * 8.0 * kUsPerSec / static_cast<double>(d_sent_ts);
      double ack_rate = static_cast<double>(d_acked) * 8.0 * kUsPerSec / static_cast<double>(d_ack_ts);
      // The round counter advances once per actual round trip (the inflight
      // floor keeps several packets in the air), so this window spans the
      // last bw_window_rtts RTT periods.
      bw_filter_.Update(round_count_, std::min(send_rate, ack_rate),
                        static_cast<uint64_t>(k_.bw_window_rtts));
    }
  }
  last_ack_ts_ = now;
  newest_acked_sent_ts_ = rec.sent_ts;
  newest_acked_cum_sent_ = rec.cum_sent_bytes;
}

void BbrSender::UpdateRound(uint64_t seq) {
  round_start_ = false;
  if (seq > round_trip_end_seq_) {
    round_count_++;
    round_trip_end_seq_ = last_sent_packet_;
    round_start_ = true;
  }
}

// StartUp ends when the bandwidth filter stops growing by the target
// factor for startup_full_rounds consecutive rounds.
void BbrSender::CheckStartupDone() {
  if (!round_start_) return;
  double bw = bw_filter_.Max();
  if (bw >= full_bw_bps_ * k_.startup_growth_target) {
    full_bw_bps_ = bw;
    full_bw_count_ = 0;
    return;
  }
  if (++full_bw_count_ >= k_.startup_full_rounds) {
    mode_ = CcMode::kDrain;
    pacing_gain_ = k_.drain_gain;
  }
}

void BbrSender::AdvanceGainCycle(SimTime now) {
  if (now - cycle_stamp_ > MinRttOrDefault()) {
    gain_cycle_index_ = (gain_cycle_index_ + 1) % 8;
    cycle_stamp_ = now;
    pacing_gain_ = GainCycle()[gain_cycle_index_];
  }
}

// Two ProbeRTT flavors share the mode. A congestion backoff reduces the
// rate to 0.75x until the excess inflight drains below the BDP; a min-rtt
// expiry falls back to the original deep probe, four packets held for
// probe_rtt_duration so the true propagation rtt resurfaces.
void BbrSender::MaybeEnterOrExitDrain(SimTime now, bool min_rtt_expired, bool congested) {
  if (mode_ != CcMode::kProbeRtt && (min_rtt_expired || congested)) {
    mode_ = CcMode::kProbeRtt;
    seq_at_backoff_ = last_sent_packet_;
    srtt_us_ = 0.0;
    base_line_rtt_us_ = kInfiniteRtt;
    bdp_bytes_ = static_cast<uint64_t>(BandwidthBps() / 8.0 * min_rtt_us_ / kUsPerSec);
    probe_rtt_deep_ = !congested;
    if (probe_rtt_deep_) {
      pacing_gain_ = 1.0;
      probe_rtt_done_ts_ = 0;  // hold timer starts once inflight reaches the floor
    } else {
      pacing_gain_ = k_.drain_gain;
    }
  }
  if (mode_ == CcMode::kProbeRtt) {
    if (probe_rtt_deep_) {
      HandleDeepProbeRtt(now);
    } else if (inflight_bytes_ < bdp_bytes_) {
      EnterProbeBw(now);
    }
  }
}

// The original ProbeRTT is bounded to probe_rtt_duration from entry, often
// too short to drain a deep queue; the delay variant's expiry probe instead
// holds at the packet floor until the hold timer runs its course, so the
// true propagation rtt actually resurfaces.
void BbrSender::MaybeEnterOrExitProbeRttOriginal(SimTime now, bool min_rtt_expired) {
  if (mode_ != CcMode::kProbeRtt && min_rtt_expired) {
    mode_ = CcMode::kProbeRtt;
    pacing_gain_ = 1.0;
    probe_rtt_deep_ = true;
    probe_rtt_done_ts_ = now + k_.probe_rtt_duration_us;
  }
  if (mode_ == CcMode::kProbeRtt) HandleDeepProbeRtt(now);
}

void BbrSender::HandleDeepProbeRtt(SimTime now) {
  uint64_t floor_bytes = static_cast<uint64_t>(k_.probe_rtt_packets) * k_.mtu_bytes;
  if (probe_rtt_done_ts_ == 0) {
    if (inflight_bytes_ <= floor_bytes) {
      probe_rtt_done_ts_ = now + k_.probe_rtt_duration_us;
      hold_min_rtt_us_ = 0;
    }
    return;
  }
  if (now >= probe_rtt_done_ts_) {
    // The hold's floor becomes the new minimum, up or down.
    if (variant_ == Variant::kDelayResponse && hold_min_rtt_us_ != 0) {
      min_rtt_us_ = hold_min_rtt_us_;
    }
    min_rtt_ts_ = now;
    EnterProbeBw(now);
  }
}

void BbrSender::EnterProbeBw(SimTime now) {
  mode_ = CcMode::kProbeBw;
  gain_cycle_index_ = 0;
  cycle_stamp_ = now;
  pacing_gain_ = GainCycle()[0];
}

uint64_t BbrSender::BandwidthBps() const {
  return static_cast<uint64_t>(bw_filter_.Max());
}

uint64_t BbrSender::PacingRateBps() const {
  uint64_t bw = BandwidthBps();
  if (bw == 0) return k_.initial_rate_bps;
  return static_cast<uint64_t>(pacing_gain_ * static_cast<double>(bw));
}

bool BbrSender::CanSend(uint32_t bytes) const {
  if (mode_ == CcMode::kProbeRtt && probe_rtt_deep_) {
    return inflight_bytes_ + bytes <= static_cast<uint64_t>(k_.probe_rtt_packets) * k_.mtu_bytes;
  }
  return inflight_bytes_ + bytes <= CwndBytes();
}

uint64_t BbrSender::CwndBytes() const {
  uint64_t bw = BandwidthBps();
  if (bw == 0 || min_rtt_us_ == 0) {
    return static_cast<uint64_t>(k_.initial_cwnd_packets) * k_.mtu_bytes;
  }
  bool ramping = mode_ == CcMode::kStartUp || mode_ == CcMode::kDrain;
  double cruise_gain = variant_ == Variant::kOriginal ? k_.original_cwnd_gain : k_.cwnd_gain;
  double gain = ramping ? k_.startup_cwnd_gain : cruise_gain;
  double bdp = static_cast<double>(bw) / 8.0 * static_cast<double>(min_rtt_us_) / kUsPerSec;
  uint64_t floor_bytes = static_cast<uint64_t>(k_.min_cwnd_packets) * k_.mtu_bytes;
  return std::max(static_cast<uint64_t>(gain * bdp), floor_bytes);
}

}  // namespace mpv
