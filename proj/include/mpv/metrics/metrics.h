#ifndef MPV_METRICS_METRICS_H
#define MPV_METRICS_METRICS_H

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "mpv/common.h"

namespace mpv {

struct CcTraceRow {
  SimTime time_us = 0;
  uint32_t flow_id = 0;
  std::string mode;
  uint64_t pacing_rate_bps = 0;
  uint64_t bw_bps = 0;
  double srtt_ms = 0;
  double min_rtt_ms = 0;
  uint64_t inflight_bytes = 0;
  double base_rtt_ms = 0;  // kept for analysis, not part of the CSV schema
};

struct FlowStats {
  std::string label;
  uint64_t sent_packets = 0;
  uint64_t sent_bytes = 0;
  uint64_t recv_packets = 0;
  uint64_t recv_bytes = 0;
  uint64_t dropped_packets = 0;
  uint64_t dropped_bytes = 0;
  double owd_sum_ms = 0;
  uint64_t owd_samples = 0;
  double owd_sum_trim_ms = 0;
  uint64_t owd_samples_trim = 0;
  uint64_t sent_packets_trim = 0;
  uint64_t dropped_packets_trim = 0;
  SimTime first_sent_ts = 0;
  SimTime last_sent_ts = 0;
  bool any_sent = false;
  std::vector<uint64_t> window_sent_bytes;  // 1 s bins

  double LossPct() const { return sent_packets ? 100.0 * dropped_packets / sent_packets : 0.0; }
  double LossPctTrim() const {
    return sent_packets_trim ? 100.0 * dropped_packets_trim / sent_packets_trim : 0.0;
  }
  double AvgOwdMs() const { return owd_samples ? owd_sum_ms / owd_samples : 0.0; }
  double AvgOwdTrimMs() const { return owd_samples_trim ? owd_sum_trim_ms / owd_samples_trim : 0.0; }
};

struct FrameRecord {
  SimTime gen_ts = 0;
  uint32_t size_bytes = 0;
  bool is_key = false;
  SimTime delivered_ts = 0;
  bool delivered = false;
  bool dropped = false;
  uint64_t reassembled_bytes = 0;
  uint32_t paths_mask = 0;
};

// Run-wide measurement sink: per-flow packet/delay/rate accounting, frame
// bookkeeping, and the three CSV emitters. Write-only during the run, read
// at summarization.
class Metrics {
 public:
  explicit Metrics(SimTime warmup_us = SecToUs(5)) : warmup_us_(warmup_us) {}

  void RegisterFlow(uint32_t flow_id, const std::string& label);
  void OnSent(uint32_t flow_id, SimTime now, uint32_t bytes);
  void OnRx(uint32_t flow_id, SimTime sent_ts, SimTime recv_ts, uint32_t bytes);
  void OnDrop(uint32_t flow_id, SimTime now, uint32_t bytes);
  void AddCcRow(CcTraceRow row) { cc_rows_.push_back(std::move(row)); }

  void OnFrameGenerated(uint64_t fid, SimTime gen_ts, uint32_t size_bytes, bool is_key);
  void OnFrameDelivered(uint64_t fid, SimTime now, uint32_t paths_mask, uint64_t reassembled_bytes);
  void OnFrameDropped(uint64_t fid, SimTime now);

  const FlowStats& Flow(uint32_t flow_id) const;
  const std::map<uint32_t, FlowStats>& flows() const { return flows_; }
  const std::map<uint64_t, FrameRecord>& frames() const { return frames_; }
  const std::vector<CcTraceRow>& cc_rows() const { return cc_rows_; }

  uint64_t FramesGenerated() const { return frames_.size(); }
  uint64_t FramesDelivered() const { return frames_delivered_; }
  uint64_t FramesDropped() const { return frames_dropped_; }
  // Mean delivery delay over delivered frames generated in [from, to).
  double AvgFrameDelayMs(SimTime from = 0, SimTime to = ~SimTime{0}) const;

  // Mean send rate from whole 1 s bins inside [from, to).
  double MeanRateBps(uint32_t flow_id, SimTime from, SimTime to) const;
  std::vector<double> WindowRatesBps(uint32_t flow_id, SimTime from, SimTime to) const;

  double PooledLossPct() const;
  double PooledAvgOwdMs() const;

  void WriteFlowTrace(std::ostream& os) const;
  void WriteFrameTrace(std::ostream& os) const;
  void WriteSummary(std::ostream& os, const std::string& scenario) const;

  static constexpr const char* kSummarySchema = "# mpvsim-summary v1";

 private:
  SimTime warmup_us_;
  std::map<uint32_t, FlowStats> flows_;
  std::map<uint64_t, FrameRecord> frames_;
  std::vector<CcTraceRow> cc_rows_;
  uint64_t frames_delivered_ = 0;
  uint64_t frames_dropped_ = 0;
};

}  // namespace mpv

#endif  // MPV_METRICS_METRICS_H
