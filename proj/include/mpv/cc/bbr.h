#ifndef MPV_CC_BBR_H
#define MPV_CC_BBR_H

#include <cstdint>
#include <limits>
#include <map>

#include "mpv/cc/constants.h"
#include "mpv/cc/controller.h"
#include "mpv/cc/max_filter.h"

namespace mpv {

// BBR-family rate controller. Two variants share the machinery:
//
//   kDelayResponse: ProbeBW gains [1.11, 0.9, 1 x6]; additionally backs
//     off into ProbeRTT (gain 0.75) when the smoothed RTT exceeds
//     beta * base RTT, using ProbeRTT as a queue-drain state that ends
//     once inflight falls below the BDP. On entry srtt is zeroed and only
//     revalidated by acks newer than the backoff point, so a single
//     episode cannot retrigger itself.
//
//   kOriginal: gains [1.25, 0.75, 1 x6]; ProbeRTT only on min-RTT expiry,
//     capping inflight to four packets for at most 200 ms.
class BbrSender : public CongestionController {
 public:
  enum class Variant { kDelayResponse, kOriginal };

  BbrSender(Variant variant, const CcConstants& k)
      : variant_(variant), k_(k), pacing_gain_(k.startup_gain) {}

  void OnPacketSent(SimTime now, uint64_t seq, uint32_t payload_bytes) override;
  void OnAck(SimTime now, uint64_t seq) override;
  void OnPacketLost(SimTime now, uint64_t seq) override;

  uint64_t PacingRateBps() const override;
  bool CanSend(uint32_t bytes) const override;
  uint64_t CwndBytes() const;

  CcMode mode() const override { return mode_; }
  const char* ModeString() const override { return CcModeName(mode_); }
  uint64_t BandwidthBps() const override;
  double SrttMs() const override { return srtt_us_ / 1000.0; }
  double MinRttMs() const override { return static_cast<double>(min_rtt_us_) / 1000.0; }
  double LastRttMs() const override { return static_cast<double>(last_rtt_us_) / 1000.0; }
  uint64_t InflightBytes() const override { return inflight_bytes_; }
  double BaseRttMs() const override { return base_line_rtt_us_ / 1000.0; }

  bool CheckIfCongestion() const;
  bool ProbeRttIsDeep() const { return mode_ == CcMode::kProbeRtt && probe_rtt_deep_; }

  // Introspection used by traces and the property suites.
  double SrttUs() const { return srtt_us_; }
  double BaseLineRttUs() const { return base_line_rtt_us_; }
  SimTime MinRttUs() const { return min_rtt_us_; }
  SimTime MinRttTimestamp() const { return min_rtt_ts_; }
  uint64_t SeqAtBackoff() const { return seq_at_backoff_; }
  uint64_t LastSentPacket() const { return last_sent_packet_; }
  uint64_t BdpBytes() const { return bdp_bytes_; }
  double PacingGain() const { return pacing_gain_; }
  int GainCycleIndex() const { return gain_cycle_index_; }
  uint64_t RoundCount() const { return round_count_; }
  uint64_t UntrackedAcks() const { return untracked_acks_; }
  const CcConstants& constants() const { return k_; }

  static constexpr double kInfiniteRtt = std::numeric_limits<double>::infinity();

 private:
  // Besides the inflight ledger fields, every record snapshots the ack
  // state at send time so its eventual sample spans one full flight; rates
  // taken over shorter spans would read the bottleneck's dequeue bursts
  // instead of this flow's share.
  struct PacketRecord {
    uint32_t bytes = 0;
    SimTime sent_ts = 0;
    uint64_t cum_sent_bytes = 0;  // total bytes sent up to and including this packet
    uint64_t snap_total_acked = 0;
    SimTime snap_last_ack_ts = 0;
    SimTime snap_newest_acked_sent_ts = 0;
    uint64_t snap_newest_acked_cum_sent = 0;
  };

  void UpdateRttAndInflight(SimTime now, uint64_t seq, const PacketRecord& rec,
                            bool min_filter_expired);
  void UpdateBandwidthSample(SimTime now, const PacketRecord& rec);
  void UpdateRound(uint64_t seq);
  void CheckStartupDone();
  void AdvanceGainCycle(SimTime now);
  void MaybeEnterOrExitDrain(SimTime now, bool min_rtt_expired, bool congested);
  void MaybeEnterOrExitProbeRttOriginal(SimTime now, bool min_rtt_expired);
  void HandleDeepProbeRtt(SimTime now);
  void EnterProbeBw(SimTime now);
  const std::array<double, 8>& GainCycle() const {
    return variant_ == Variant::kDelayResponse ? k_.delay_gain_cycle : k_.original_gain_cycle;
  }
  SimTime MinRttOrDefault() const { return min_rtt_us_ ? min_rtt_us_ : MsToUs(100); }

  Variant variant_;
  CcConstants k_;

  CcMode mode_ = CcMode::kStartUp;
  double pacing_gain_;
  int gain_cycle_index_ = 0;
  SimTime cycle_stamp_ = 0;

  std::map<uint64_t, PacketRecord> sent_packets_map_;
  uint64_t inflight_bytes_ = 0;
  uint64_t last_sent_packet_ = 0;
  uint64_t seq_at_backoff_ = 0;
  uint64_t total_sent_bytes_ = 0;
  uint64_t total_acked_bytes_ = 0;
  uint64_t untracked_acks_ = 0;

  SimTime min_rtt_us_ = 0;  // 0 = no sample yet
  SimTime min_rtt_ts_ = 0;
  SimTime last_rtt_us_ = 0;
  double srtt_us_ = 0.0;  // 0 = invalid (between backoff and first fresh ack)
  double base_line_rtt_us_ = kInfiniteRtt;

  // Ack-side state mirrored into the send-time snapshots.
  SimTime last_ack_ts_ = 0;
  SimTime newest_acked_sent_ts_ = 0;
  uint64_t newest_acked_cum_sent_ = 0;

  WindowedMaxFilter bw_filter_;
  uint64_t round_count_ = 0;
  uint64_t round_trip_end_seq_ = 0;
  bool round_start_ = false;

  double full_bw_bps_ = 0.0;
  int full_bw_count_ = 0;

  uint64_t bdp_bytes_ = 0;
  bool probe_rtt_deep_ = false;    // expiry-triggered: four-packet hold
  SimTime hold_min_rtt_us_ = 0;    // lowest sample seen during the hold
  SimTime probe_rtt_done_ts_ = 0;  // 0 until the hold timer starts
};

}  // namespace mpv

#endif  // MPV_CC_BBR_H
