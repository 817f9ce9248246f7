#ifndef MPV_CC_CONSTANTS_H
#define MPV_CC_CONSTANTS_H

#include <array>
#include <cstdint>

#include "mpv/common.h"

namespace mpv {

constexpr uint32_t kDefaultMtuBytes = 1000;

// Every constant here is surfaced through the experiment config so
// sensitivity studies need no code change.
struct CcConstants {
  // Weight of the newest sample in the SRTT exponential filter.
  double alpha = 0.9;
  // Congestion threshold: ProbeBW backs off once srtt > beta * base rtt.
  double beta = 1.2;
  // Entering ProbeRTT is forced when no (near-)minimal RTT was sampled
  // for this long.
  SimTime min_rtt_expiry_us = SecToUs(10);
  // An RTT sample below similar_min_rtt * min_rtt refreshes the min-RTT
  // timestamp without lowering the minimum.
  double similar_min_rtt = 1.05;

  std::array<double, 8> delay_gain_cycle = {1.11, 0.9, 1, 1, 1, 1, 1, 1};
  std::array<double, 8> original_gain_cycle = {1.25, 0.75, 1, 1, 1, 1, 1, 1};

  double startup_gain = 2.885;  // 2 / ln 2
  double drain_gain = 0.75;     // also the congestion-backoff gain

  // Inflight ceiling: cwnd_gain * estimated BDP outside StartUp/Drain
  // (startup_gain * BDP inside), never below min_cwnd_packets. The ceiling
  // is what lets the ack clock stall a flow whose pacing outruns the pipe.
  // The delay variant cruises with less allowance than the original.
  double startup_cwnd_gain = 2.0;
  double cwnd_gain = 1.35;
  double original_cwnd_gain = 2.0;
  uint32_t min_cwnd_packets = 4;
  uint32_t initial_cwnd_packets = 10;

  // StartUp exits when the bandwidth filter fails to grow by this factor
  // across startup_full_rounds consecutive rounds.
  double startup_growth_target = 1.25;
  int startup_full_rounds = 3;

  // Max-filter window for the per-report bandwidth samples, in round-trip
  // periods of wall time (the estimate holds the max of the last
  // bw_window_rtts * min_rtt worth of samples).
  int bw_window_rtts = 10;

  // Original-BBR ProbeRTT: inflight capped to this many packets, episode
  // bounded by probe_rtt_duration.
  uint32_t probe_rtt_packets = 4;
  SimTime probe_rtt_duration_us = MsToUs(200);

  // Bootstrap before any bandwidth estimate: 10 MTU per assumed 100 ms RTT.
  uint64_t initial_rate_bps = 800000;

  uint32_t mtu_bytes = kDefaultMtuBytes;
};

}  // namespace mpv

#endif  // MPV_CC_CONSTANTS_H
