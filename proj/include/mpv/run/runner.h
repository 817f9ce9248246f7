#ifndef MPV_RUN_RUNNER_H
#define MPV_RUN_RUNNER_H

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mpv/flow/path_receiver.h"
#include "mpv/flow/path_sender.h"
#include "mpv/metrics/metrics.h"
#include "mpv/run/config.h"
#include "mpv/simulator.h"
#include "mpv/topology.h"
#include "mpv/video/session_receiver.h"
#include "mpv/video/session_sender.h"

namespace mpv {

// Everything a finished run leaves behind. Owns the component graph so
// tests can inspect controllers, links, and metrics directly.
struct RunResult {
  std::unique_ptr<Simulator> sim;
  std::unique_ptr<Metrics> metrics;
  TopologySpec topology;
  std::vector<std::unique_ptr<DropTailLink>> links;
  std::vector<std::unique_ptr<FeedbackPipe>> pipes;
  std::vector<std::unique_ptr<PathSender>> senders;
  std::vector<std::unique_ptr<PathReceiver>> receivers;
  std::vector<std::map<uint32_t, PathReceiver*>> link_sinks;
  std::unique_ptr<SessionSender> session_tx;
  std::unique_ptr<SessionReceiver> session_rx;
  std::vector<uint32_t> background_flow_ids;
  std::vector<uint32_t> session_flow_ids;
  uint64_t events_processed = 0;
};

RunResult RunExperiment(const ExperimentConfig& cfg);

// Writes flow_trace.csv, frame_trace.csv, summary.csv and the resolved
// config echo into out_dir (created if needed).
void WriteOutputs(const RunResult& result, const ExperimentConfig& cfg, const std::string& out_dir);

}  // namespace mpv

#endif  // MPV_RUN_RUNNER_H
