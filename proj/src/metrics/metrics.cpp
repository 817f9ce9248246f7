#include "mpv/metrics/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace mpv {
namespace {

std::string Fmt(double v, int prec = 3) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
  return buf;
}

}  // namespace

void Metrics::RegisterFlow(uint32_t flow_id, const std::string& label) {
  flows_[flow_id].label = label;
}

void Metrics::OnSent(uint32_t flow_id, SimTime now, uint32_t bytes) {
  FlowStats& f = flows_[flow_id];
  f.sent_packets++;
  f.sent_bytes += bytes;
  if (!f.any_sent) {
    f.first_sent_ts = now;
    f.any_sent = true;
  }
  f.last_sent_ts = now;
  if (now >= warmup_us_) f.sent_packets_trim++;
  size_t bin = now / kUsPerSec;
  if (f.window_sent_bytes.size() <= bin) f.window_sent_bytes.resize(bin + 1, 0);
  f.window_sent_bytes[bin] += bytes;
}

void Metrics::OnRx(uint32_t flow_id, SimTime sent_ts, SimTime recv_ts, uint32_t bytes) {
  MPV_REQUIRE(recv_ts >= sent_ts, "OnRx: receive timestamp precedes send timestamp");
  FlowStats& f = flows_[flow_id];
  f.recv_packets++;
  f.recv_bytes += bytes;
  double owd_ms = UsToMs(recv_ts - sent_ts);
  f.owd_sum_ms += owd_ms;
  f.owd_samples++;
  if (recv_ts >= warmup_us_) {
    f.owd_sum_trim_ms += owd_ms;
    f.owd_samples_trim++;
  }
}

void Metrics::OnDrop(uint32_t flow_id, SimTime now, uint32_t bytes) {
  FlowStats& f = flows_[flow_id];
  f.dropped_packets++;
  f.dropped_bytes += bytes;
  if (now >= warmup_us_) f.dropped_packets_trim++;
}

void Metrics::OnFrameGenerated(uint64_t fid, SimTime gen_ts, uint32_t size_bytes, bool is_key) {
  FrameRecord& r = frames_[fid];
  r.gen_ts = gen_ts;
  r.size_bytes = size_bytes;
  r.is_key = is_key;
}

void Metrics::OnFrameDelivered(uint64_t fid, SimTime now, uint32_t paths_mask, uint64_t reassembled_bytes) {
  FrameRecord& r = frames_[fid];
  MPV_REQUIRE(!r.delivered, "frame delivered twice");
  r.delivered = true;
  r.delivered_ts = now;
  r.paths_mask = paths_mask;
  r.reassembled_bytes = reassembled_bytes;
  frames_delivered_++;
}

void Metrics::OnFrameDropped(uint64_t fid, SimTime now) {
  FrameRecord& r = frames_[fid];
  r.dropped = true;
  r.delivered_ts = now;
  frames_dropped_++;
}

const FlowStats& Metrics::Flow(uint32_t flow_id) const {
  static const FlowStats kEmpty;
  auto it = flows_.find(flow_id);
  return it == flows_.end() ? kEmpty : it->second;
}

double Metrics::AvgFrameDelayMs(SimTime from, SimTime to) const {
  double sum = 0;
  uint64_t n = 0;
  for (const auto& [fid, r] : frames_) {
    if (!r.delivered || r.gen_ts < from || r.gen_ts >= to) continue;
    sum += UsToMs(r.delivered_ts - r.gen_ts);
    n++;
  }
  return n ? sum / n : 0.0;
}

double Metrics::MeanRateBps(uint32_t flow_id, SimTime from, SimTime to) const {
  auto rates = WindowRatesBps(flow_id, from, to);
  if (rates.empty()) return 0.0;
  double sum = 0;
  for (double r : rates) sum += r;
  return sum / rates.size();
}

std::vector<double> Metrics::WindowRatesBps(uint32_t flow_id, SimTime from, SimTime to) const {
  std::vector<double> out;
  auto it = flows_.find(flow_id);
  if (it == flows_.end()) return out;
  const auto& bins = it->second.window_sent_bytes;
  for (size_t k = (from + kUsPerSec - 1) / kUsPerSec; (k + 1) * kUsPerSec <= to; ++k) {
    uint64_t bytes = k < bins.size() ? bins[k] : 0;
    out.push_back(static_cast<double>(bytes) * 8.0);
  }
  return out;
}

double Metrics::PooledLossPct() const {
  uint64_t sent = 0, dropped = 0;
  for (const auto& [id, f] : flows_) {
    sent += f.sent_packets;
    dropped += f.dropped_packets;
  }
  return sent ? 100.0 * dropped / sent : 0.0;
}

double Metrics::PooledAvgOwdMs() const {
  double sum = 0;
  uint64_t n = 0;
  for (const auto& [id, f] : flows_) {
    sum += f.owd_sum_ms;
    n += f.owd_samples;
  }
  return n ? sum / n : 0.0;
}

void Metrics::WriteFlowTrace(std::ostream& os) const {
  os << "time_us,flow_id,mode,pacing_rate_bps,bw_bps,srtt_ms,min_rtt_ms,inflight_bytes\n";
  for (const auto& r : cc_rows_) {
    os << r.time_us << ',' << r.flow_id << ',' << r.mode << ',' << r.pacing_rate_bps << ','
       << r.bw_bps << ',' << Fmt(r.srtt_ms) << ',' << Fmt(r.min_rtt_ms) << ',' << r.inflight_bytes
       << '\n';
  }
}

void Metrics::WriteFrameTrace(std::ostream& os) const {
  os << "fid,gen_ts_us,delivered_ts_us,size_bytes,is_key,paths_used\n";
  for (const auto& [fid, r] : frames_) {
    os << fid << ',' << r.gen_ts << ',';
    if (r.delivered) {
      os << r.delivered_ts;
    } else {
      os << -1;
    }
    os << ',' << r.size_bytes << ',' << (r.is_key ? 1 : 0) << ',';
    std::string paths;
    for (uint32_t p = 0; p < 32; ++p) {
      if (r.paths_mask & (1u << p)) {
        if (!paths.empty()) paths += '|';
        paths += std::to_string(p);
      }
    }
    os << paths << '\n';
  }
}

void Metrics::WriteSummary(std::ostream& os, const std::string& scenario) const {
  os << kSummarySchema << '\n';
  os << "scenario,row,flow_id,label,sent_pkts,recv_pkts,drop_pkts,loss_pct,loss_pct_trim,"
        "avg_owd_ms,avg_owd_trim_ms,avg_rate_bps,frames_generated,frames_delivered,"
        "frames_dropped,avg_frame_delay_ms\n";
  for (const auto& [id, f] : flows_) {
    double span_s = f.any_sent ? UsToSec(f.last_sent_ts - f.first_sent_ts) : 0.0;
    double rate = span_s > 0 ? static_cast<double>(f.sent_bytes) * 8.0 / span_s : 0.0;
    os << scenario << ",flow," << id << ',' << f.label << ',' << f.sent_packets << ','
       << f.recv_packets << ',' << f.dropped_packets << ',' << Fmt(f.LossPct()) << ','
       << Fmt(f.LossPctTrim()) << ',' << Fmt(f.AvgOwdMs()) << ',' << Fmt(f.AvgOwdTrimMs()) << ','
       << Fmt(rate, 0) << ",,,,\n";
  }
  uint64_t sent = 0, recv = 0, dropped = 0;
  for (const auto& [id, f] : flows_) {
    sent += f.sent_packets;
    recv += f.recv_packets;
    dropped += f.dropped_packets;
  }
  os << scenario << ",pooled,,all," << sent << ',' << recv << ',' << dropped << ','
     << Fmt(PooledLossPct()) << ",," << Fmt(PooledAvgOwdMs()) << ",,,,,,\n";
  if (!frames_.empty()) {
    os << scenario << ",frames,,session,,,,,,,,," << frames_.size() << ',' << frames_delivered_
       << ',' << frames_dropped_ << ',' << Fmt(AvgFrameDelayMs()) << '\n';
  }
}

}  // namespace mpv
