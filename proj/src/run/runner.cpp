#include "mpv/run/runner.h"

#include <filesystem>
#include <fstream>

#include "mpv/cc/aimd.h"
#include "mpv/cc/bbr.h"

namespace mpv {
namespace {

constexpr SimTime kCcTracePeriod = MsToUs(100);

std::unique_ptr<CongestionController> MakeCc(const std::string& name, const CcConstants& k) {
  if (name == "delay_bbr") return std::make_unique<BbrSender>(BbrSender::Variant::kDelayResponse, k);
  if (name == "baseline_bbr") return std::make_unique<BbrSender>(BbrSender::Variant::kOriginal, k);
  if (name == "aimd") return std::make_unique<AimdSender>(k);
  MPV_REQUIRE(false, "unknown congestion controller '" + name + "'");
  return nullptr;
}

void InstallCcSampler(Simulator& sim, Metrics& metrics, PathSender& sender, SimTime until) {
  SimTime now = sim.Now();
  const CongestionController& cc = sender.cc();
  metrics.AddCcRow(CcTraceRow{now, sender.flow_id(), cc.ModeString(), cc.PacingRateBps(),
                              cc.BandwidthBps(), cc.SrttMs(), cc.MinRttMs(), cc.InflightBytes(),
                              cc.BaseRttMs()});
  if (now + kCcTracePeriod <= until) {
    sim.ScheduleIn(kCcTracePeriod,
                   [&sim, &metrics, &sender, until] { InstallCcSampler(sim, metrics, sender, until); });
  }
}

}  // namespace

RunResult RunExperiment(const ExperimentConfig& cfg) {
  cfg.Validate();

  RunResult r;
  r.topology = BuildTopology(cfg.table, cfg.case_id);
  r.sim = std::make_unique<Simulator>(cfg.seed);
  r.metrics = std::make_unique<Metrics>();
  Simulator& sim = *r.sim;
  Metrics& metrics = *r.metrics;
  const SimTime duration = static_cast<SimTime>(cfg.duration_s * kUsPerSec);

  size_t total_flows = cfg.flows.size() + (cfg.session ? cfg.session->paths.size() : 0);
  r.links.reserve(r.topology.paths.size());
  r.link_sinks.resize(r.topology.paths.size());
  r.pipes.reserve(total_flows);
  r.senders.reserve(total_flows);
  r.receivers.reserve(total_flows);

  for (const auto& path : r.topology.paths) {
    auto link = std::make_unique<DropTailLink>(sim, path.ToLinkConfig());
    link->SetDropFn([&sim, &metrics](const WirePacket& pkt) {
      metrics.OnDrop(pkt.flow_id, sim.Now(), pkt.size_bytes);
    });
    r.links.push_back(std::move(link));
  }
  for (size_t p = 0; p < r.links.size(); ++p) {
    auto* sinks = &r.link_sinks[p];
    r.links[p]->SetDeliverFn([sinks](const WirePacket& pkt) {
      auto it = sinks->find(pkt.flow_id);
      if (it != sinks->end()) it->second->OnPacket(pkt);
    });
  }

  // Small random start offset per flow keeps simultaneous-start runs from
  // phase-locking; the seed is the only source of randomness.
  auto start_jitter = [&sim]() -> SimTime { return sim.Rng()() % 1000; };

  uint32_t next_flow_id = 1;
  auto add_flow = [&](const std::string& cc_name, int path, SimTime start, SimTime stop,
                      uint32_t path_index, const std::string& label) -> PathSender* {
    uint32_t flow_id = next_flow_id++;
    auto sender = std::make_unique<PathSender>(sim, flow_id, MakeCc(cc_name, cfg.cc),
                                               *r.links[path], metrics, cfg.cc.mtu_bytes);
    sender->pacer().SetPaddingEnabled(true);
    auto pipe = std::make_unique<FeedbackPipe>(sim, r.topology.paths[path].ToLinkConfig().prop_delay_us);
    PathSender* sender_ptr = sender.get();
    pipe->SetDeliverFn([sender_ptr](const Feedback& fb) { sender_ptr->OnFeedback(fb); });
    auto receiver = std::make_unique<PathReceiver>(sim, flow_id, path_index, *pipe, metrics);
    r.link_sinks[path][flow_id] = receiver.get();
    metrics.RegisterFlow(flow_id, label);
    sender->ScheduleStart(start);
    sender->ScheduleStop(stop);
    sim.ScheduleAt(0, [&sim, &metrics, sender_ptr, duration] {
      InstallCcSampler(sim, metrics, *sender_ptr, duration);
    });
    r.pipes.push_back(std::move(pipe));
    r.senders.push_back(std::move(sender));
    r.receivers.push_back(std::move(receiver));
    return sender_ptr;
  };

  for (const auto& f : cfg.flows) {
    SimTime start = static_cast<SimTime>(f.start_s * kUsPerSec) + start_jitter();
    SimTime stop = static_cast<SimTime>(f.stop_s * kUsPerSec);
    add_flow(f.cc, f.path, start, stop, 0, f.cc);
    r.background_flow_ids.push_back(next_flow_id - 1);
  }

  if (cfg.session) {
    const SessionSpec& s = *cfg.session;
    r.session_rx = std::make_unique<SessionReceiver>(sim, cfg.video, metrics);
    SessionReceiver* rx = r.session_rx.get();
    std::vector<PathSender*> session_paths;
    SimTime start = static_cast<SimTime>(s.start_s * kUsPerSec) + start_jitter();
    SimTime stop = static_cast<SimTime>(s.stop_s * kUsPerSec);
    for (size_t i = 0; i < s.paths.size(); ++i) {
      std::string label = "session_" + s.scheduler + "_p" + std::to_string(i);
      PathSender* sender = add_flow("delay_bbr", s.paths[i], start, stop, static_cast<uint32_t>(i), label);
      r.session_flow_ids.push_back(next_flow_id - 1);
      r.receivers.back()->SetMediaSink(
          [rx](SimTime now, const Segment& seg, uint32_t path_index) { rx->OnSegment(now, seg, path_index); });
      session_paths.push_back(sender);
    }
    r.session_tx = std::make_unique<SessionSender>(sim, cfg.video, cfg.cc.mtu_bytes,
                                                   MakeScheduler(s.scheduler, cfg.sched),
                                                   session_paths, metrics);
    r.session_tx->ScheduleStart(start);
    r.session_tx->ScheduleStop(stop);
  }

  r.events_processed = sim.RunUntil(duration);
  return r;
}

void WriteOutputs(const RunResult& result, const ExperimentConfig& cfg, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream os(out_dir + "/flow_trace.csv");
    result.metrics->WriteFlowTrace(os);
  }
  {
    std::ofstream os(out_dir + "/frame_trace.csv");
    result.metrics->WriteFrameTrace(os);
  }
  {
    std::ofstream os(out_dir + "/summary.csv");
    result.metrics->WriteSummary(os, cfg.name);
  }
  {
    std::ofstream os(out_dir + "/config.json");
    os << cfg.ToJsonText();
  }
}

}  // namespace mpv
