#ifndef MPV_CC_AIMD_H
#define MPV_CC_AIMD_H

#include <cstdint>
#include <map>

#include "mpv/cc/constants.h"
#include "mpv/cc/controller.h"

namespace mpv {

// Loss-based window flow used as background traffic: additive increase of
// one MTU per RTT, window halved on loss. Ack-clocked through the pacer's
// CanSend gate; the nominal pacing rate is effectively unlimited so the
// bottleneck serializer does the spacing.
class AimdSender : public CongestionController {
 public:
  explicit AimdSender(const CcConstants& k) : k_(k), cwnd_bytes_(4.0 * k.mtu_bytes) {}

  void OnPacketSent(SimTime now, uint64_t seq, uint32_t payload_bytes) override;
  void OnAck(SimTime now, uint64_t seq) override;
  void OnPacketLost(SimTime now, uint64_t seq) override;

  uint64_t PacingRateBps() const override { return 1000000000; }
  bool CanSend(uint32_t bytes) const override {
    return static_cast<double>(inflight_bytes_ + bytes) <= cwnd_bytes_;
  }

  CcMode mode() const override { return CcMode::kProbeBw; }
  const char* ModeString() const override { return in_slow_start_ ? "SlowStart" : "CongAvoid"; }
  uint64_t BandwidthBps() const override {
    if (srtt_us_ <= 0.0) return 0;
    return static_cast<uint64_t>(cwnd_bytes_ * 8.0 * kUsPerSec / srtt_us_);
  }
  double SrttMs() const override { return srtt_us_ / 1000.0; }
  double MinRttMs() const override { return static_cast<double>(min_rtt_us_) / 1000.0; }
  double LastRttMs() const override { return static_cast<double>(last_rtt_us_) / 1000.0; }
  uint64_t InflightBytes() const override { return inflight_bytes_; }

  double CwndBytes() const { return cwnd_bytes_; }

 private:
  struct Sent {
    uint32_t bytes;
    SimTime sent_ts;
  };

  CcConstants k_;
  double cwnd_bytes_;
  double ssthresh_bytes_ = 1e18;
  bool in_slow_start_ = true;
  uint64_t inflight_bytes_ = 0;
  uint64_t last_sent_seq_ = 0;
  uint64_t recovery_end_seq_ = 0;  // one halving per window of loss
  std::map<uint64_t, Sent> outstanding_;
  double srtt_us_ = 0.0;
  SimTime min_rtt_us_ = 0;
  SimTime last_rtt_us_ = 0;
};

}  // namespace mpv

#endif  // MPV_CC_AIMD_H
