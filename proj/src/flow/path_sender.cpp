#include "mpv/flow/path_sender.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace mpv {

namespace {
constexpr SimTime kTimeoutSweepPeriod = MsToUs(100);
}

PathSender::PathSender(Simulator& sim, uint32_t flow_id, std::unique_ptr<CongestionController> cc,
                       DropTailLink& link, Metrics& metrics, uint32_t mtu_bytes)
    : sim_(sim),
      flow_id_(flow_id),
      cc_(std::move(cc)),
      link_(link),
      metrics_(metrics),
      pacer_(sim, *cc_, mtu_bytes) {
  pacer_.SetSendFn([this](const Segment* seg, uint32_t bytes) { SendPacket(seg, bytes); });
}

void PathSender::ScheduleStart(SimTime t) {
  sim_.ScheduleAt(t, [this] {
    running_ = true;
    pacer_.SetActive(true);
    SweepTimeouts(sim_.Now());
  });
}

void PathSender::ScheduleStop(SimTime t) {
  sim_.ScheduleAt(t, [this] {
    running_ = false;
    pacer_.SetActive(false);
  });
}

void PathSender::SendPacket(const Segment* seg, uint32_t bytes) {
  SimTime now = sim_.Now();
  uint64_t seq = next_seq_++;

  WirePacket pkt;
  pkt.flow_id = flow_id_;
  pkt.seq = seq;
  pkt.size_bytes = bytes;
  pkt.sent_ts = now;
  if (seg) {
    pkt.kind = PacketKind::kMedia;
    pkt.segment = *seg;
  }

  cc_->OnPacketSent(now, seq, bytes);
  Outstanding info{bytes, now, seg != nullptr, seg ? seg->fid : 0, seg ? seg->index : 0, 0};
  outstanding_.emplace(seq, info);
  metrics_.OnSent(flow_id_, now, bytes);
  if (seg && hooks_.on_media_sent) hooks_.on_media_sent(seg->fid, seg->index, now);

  link_.Enqueue(pkt);
}

void PathSender::OnFeedback(const Feedback& fb) {
  SimTime now = sim_.Now();
  pacer_.SyncTokens();
  auto it = outstanding_.find(fb.acked_seq);
  if (it != outstanding_.end()) {
    double rtt = static_cast<double>(now - it->second.sent_ts);
    if (rto_srtt_us_ == 0) {
      rto_srtt_us_ = rtt;
      rto_var_us_ = rtt / 2;
    } else {
      rto_var_us_ = 0.75 * rto_var_us_ + 0.25 * std::abs(rto_srtt_us_ - rtt);
      rto_srtt_us_ = 0.875 * rto_srtt_us_ + 0.125 * rtt;
    }
    outstanding_.erase(it);
  }
  cc_->OnAck(now, fb.acked_seq);
  DetectLosses(now, fb.acked_seq);
  pacer_.OnRateChanged();
  if (hooks_.on_feedback) hooks_.on_feedback(now);
}

SimTime PathSender::LossTimeoutUs() const {
  if (rto_srtt_us_ == 0) return SecToUs(1);
  // The variance term is floored at half an srtt: in-flight ages reach one
  // full rtt, so a bare srtt timeout would race its own acks once the
  // variance decays.
  return static_cast<SimTime>(rto_srtt_us_ + std::max(4.0 * rto_var_us_, rto_srtt_us_ / 2));
}

void PathSender::DeclareLost(uint64_t seq, const Outstanding& info, SimTime now) {
  declared_losses_++;
  cc_->OnPacketLost(now, seq);
  if (info.is_media && hooks_.on_media_lost) hooks_.on_media_lost(info.fid, info.index, now);
}

// The path is FIFO, so a gap below the newest ack means a drop; the
// three-dup margin keeps the rule conservative, the age rule catches tails.
void PathSender::DetectLosses(SimTime now, uint64_t acked_seq) {
  SimTime timeout = LossTimeoutUs();
  std::vector<std::pair<uint64_t, Outstanding>> lost;
  for (auto it = outstanding_.begin(); it != outstanding_.end() && it->first < acked_seq;) {
    it->second.higher_acked++;
    if (it->second.higher_acked >= kDupAckThreshold || now - it->second.sent_ts > timeout) {
      lost.emplace_back(it->first, it->second);
      it = outstanding_.erase(it);
    } else {
      ++it;
    }
  }
  for (const auto& [seq, info] : lost) DeclareLost(seq, info, now);
}

void PathSender::SweepTimeouts(SimTime now) {
  if (!running_) return;
  SimTime timeout = LossTimeoutUs();
  std::vector<std::pair<uint64_t, Outstanding>> lost;
  for (auto it = outstanding_.begin(); it != outstanding_.end();) {
    if (now - it->second.sent_ts > timeout) {
      lost.emplace_back(it->first, it->second);
      it = outstanding_.erase(it);
    } else {
      break;  // entries are in send order
    }
  }
  for (const auto& [seq, info] : lost) DeclareLost(seq, info, now);
  if (!lost.empty()) pacer_.OnRateChanged();
  sim_.ScheduleIn(kTimeoutSweepPeriod, [this] { SweepTimeouts(sim_.Now()); });
}

PathSnapshot PathSender::Snapshot(uint32_t path_index) const {
  PathSnapshot s;
  s.path_id = path_index;
  s.rtt_ms = cc_->LastRttMs();
  s.pending_bytes = pacer_.pending_bytes();
  s.pacing_rate_bps = cc_->PacingRateBps();
  s.abw_bps = cc_->BandwidthBps();
  s.owd_ms = s.rtt_ms / 2.0;
  return s;
}

}  // namespace mpv
