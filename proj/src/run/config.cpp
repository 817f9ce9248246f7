#include "mpv/run/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mpv/topology.h"

namespace mpv {
namespace {

using nlohmann::json;

template <typename T>
T GetOr(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  return it->get<T>();
}

}  // namespace

ExperimentConfig ExperimentConfig::FromJsonText(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }

  ExperimentConfig cfg;
  try {
    cfg.name = GetOr<std::string>(j, "name", "unnamed");
    if (j.contains("topology")) {
      cfg.table = GetOr<int>(j["topology"], "table", 1);
      cfg.case_id = GetOr<int>(j["topology"], "case", 1);
    }
    cfg.duration_s = GetOr<double>(j, "duration_s", 300.0);
    cfg.seed = GetOr<uint64_t>(j, "seed", 1);

    for (const auto& f : GetOr<json>(j, "flows", json::array())) {
      FlowSpec spec;
      spec.cc = GetOr<std::string>(f, "cc", "delay_bbr");
      spec.start_s = GetOr<double>(f, "start_s", 0.0);
      spec.stop_s = GetOr<double>(f, "stop_s", cfg.duration_s);
      spec.path = GetOr<int>(f, "path", 0);
      cfg.flows.push_back(spec);
    }

    if (j.contains("session") && !j["session"].is_null()) {
      const json& s = j["session"];
      SessionSpec spec;
      spec.scheduler = GetOr<std::string>(s, "scheduler", "min_cost");
      spec.max_bitrate_bps = GetOr<uint64_t>(s, "max_bitrate_bps", 2000000);
      spec.frame_rate_fps = GetOr<double>(s, "frame_rate_fps", 25.0);
      spec.paths = GetOr<std::vector<int>>(s, "paths", {});
      spec.start_s = GetOr<double>(s, "start_s", 0.0);
      spec.stop_s = GetOr<double>(s, "stop_s", cfg.duration_s);
      cfg.session = spec;
    }

    const json k = GetOr<json>(j, "constants", json::object());
    cfg.cc.alpha = GetOr<double>(k, "alpha", cfg.cc.alpha);
    cfg.cc.beta = GetOr<double>(k, "beta", cfg.cc.beta);
    cfg.cc.min_rtt_expiry_us =
        static_cast<SimTime>(GetOr<double>(k, "min_rtt_expiry_s", 10.0) * kUsPerSec);
    cfg.cc.similar_min_rtt = GetOr<double>(k, "similar_min_rtt", cfg.cc.similar_min_rtt);
    cfg.cc.startup_gain = GetOr<double>(k, "startup_gain", cfg.cc.startup_gain);
    cfg.cc.drain_gain = GetOr<double>(k, "drain_gain", cfg.cc.drain_gain);
    cfg.cc.mtu_bytes = GetOr<uint32_t>(k, "mtu_bytes", cfg.cc.mtu_bytes);
    cfg.cc.probe_rtt_duration_us = MsToUs(GetOr<uint64_t>(k, "probe_rtt_ms", 200));
    cfg.cc.initial_rate_bps = GetOr<uint64_t>(k, "initial_rate_bps", cfg.cc.initial_rate_bps);
    if (k.contains("delay_gain_cycle")) {
      auto v = k["delay_gain_cycle"].get<std::vector<double>>();
      if (v.size() != 8) throw ConfigError("constants.delay_gain_cycle must have 8 entries");
      std::copy(v.begin(), v.end(), cfg.cc.delay_gain_cycle.begin());
    }
    if (k.contains("original_gain_cycle")) {
      auto v = k["original_gain_cycle"].get<std::vector<double>>();
      if (v.size() != 8) throw ConfigError("constants.original_gain_cycle must have 8 entries");
      std::copy(v.begin(), v.end(), cfg.cc.original_gain_cycle.begin());
    }

    cfg.sched.mtu_bytes = cfg.cc.mtu_bytes;
    cfg.sched.wrr_round_n = GetOr<int>(k, "wrr_round_n", cfg.sched.wrr_round_n);
    cfg.sched.edcld_weight = GetOr<double>(k, "edcld_weight", cfg.sched.edcld_weight);

    cfg.video.key_frame_interval = GetOr<uint32_t>(k, "key_frame_interval", cfg.video.key_frame_interval);
    cfg.video.key_size_multiplier = GetOr<double>(k, "key_size_multiplier", cfg.video.key_size_multiplier);
    cfg.video.rate_utilization = GetOr<double>(k, "rate_utilization", cfg.video.rate_utilization);
    cfg.video.sender_retention_us = MsToUs(GetOr<uint64_t>(k, "retention_ms", 500));
    cfg.video.receiver_wait_us = MsToUs(GetOr<uint64_t>(k, "receiver_wait_ms", 500));
    if (cfg.session) {
      cfg.video.max_bitrate_bps = cfg.session->max_bitrate_bps;
      cfg.video.frame_rate_fps = cfg.session->frame_rate_fps;
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field has wrong type: ") + e.what());
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::FromJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return FromJsonText(ss.str());
}

std::string ExperimentConfig::ToJsonText() const {
  json j;
  j["name"] = name;
  j["topology"] = {{"table", table}, {"case", case_id}};
  j["duration_s"] = duration_s;
  j["seed"] = seed;
  j["flows"] = json::array();
  for (const auto& f : flows) {
    j["flows"].push_back(
        {{"cc", f.cc}, {"start_s", f.start_s}, {"stop_s", f.stop_s}, {"path", f.path}});
  }
  if (session) {
    j["session"] = {{"scheduler", session->scheduler},
                    {"max_bitrate_bps", session->max_bitrate_bps},
                    {"frame_rate_fps", session->frame_rate_fps},
                    {"paths", session->paths},
                    {"start_s", session->start_s},
                    {"stop_s", session->stop_s}};
  }
  json k;
  k["alpha"] = cc.alpha;
  k["beta"] = cc.beta;
  k["min_rtt_expiry_s"] = static_cast<double>(cc.min_rtt_expiry_us) / kUsPerSec;
  k["similar_min_rtt"] = cc.similar_min_rtt;
  k["startup_gain"] = cc.startup_gain;
  k["drain_gain"] = cc.drain_gain;
  k["mtu_bytes"] = cc.mtu_bytes;
  k["probe_rtt_ms"] = cc.probe_rtt_duration_us / kUsPerMs;
  k["initial_rate_bps"] = cc.initial_rate_bps;
  k["delay_gain_cycle"] = cc.delay_gain_cycle;
  k["original_gain_cycle"] = cc.original_gain_cycle;
  k["wrr_round_n"] = sched.wrr_round_n;
  k["edcld_weight"] = sched.edcld_weight;
  k["key_frame_interval"] = video.key_frame_interval;
  k["key_size_multiplier"] = video.key_size_multiplier;
  k["rate_utilization"] = video.rate_utilization;
  k["retention_ms"] = video.sender_retention_us / kUsPerMs;
  k["receiver_wait_ms"] = video.receiver_wait_us / kUsPerMs;
  j["constants"] = k;
  return j.dump(2) + "\n";
}

void ExperimentConfig::Validate() const {
  if (name.empty()) throw ConfigError("name: must not be empty");
  TopologySpec topo;
  try {
    topo = BuildTopology(table, case_id);
  } catch (const ContractError& e) {
    throw ConfigError(std::string("topology: ") + e.what());
  }
  if (duration_s <= 0) throw ConfigError("duration_s: must be positive");
  const std::set<std::string> cc_names = {"delay_bbr", "baseline_bbr", "aimd"};
  for (size_t i = 0; i < flows.size(); ++i) {
    const auto& f = flows[i];
    std::string where = "flows[" + std::to_string(i) + "]";
    if (!cc_names.count(f.cc))
      throw ConfigError(where + ".cc: unknown controller '" + f.cc + "'");
    if (f.start_s >= f.stop_s) throw ConfigError(where + ".start_s: must be before stop_s");
    if (f.stop_s > duration_s) throw ConfigError(where + ".stop_s: exceeds duration_s");
    if (f.path < 0 || static_cast<size_t>(f.path) >= topo.paths.size())
      throw ConfigError(where + ".path: no such path in topology");
  }
  if (session) {
    const std::set<std::string> sched_names = {"min_cost", "wrr", "edcld", "sfl"};
    if (!sched_names.count(session->scheduler))
      throw ConfigError("session.scheduler: unknown scheduler '" + session->scheduler + "'");
    if (session->paths.empty()) throw ConfigError("session.paths: must name at least one path");
    for (int p : session->paths) {
      if (p < 0 || static_cast<size_t>(p) >= topo.paths.size())
        throw ConfigError("session.paths: no such path in topology");
    }
    if (session->max_bitrate_bps == 0) throw ConfigError("session.max_bitrate_bps: must be positive");
    if (session->frame_rate_fps <= 0) throw ConfigError("session.frame_rate_fps: must be positive");
    if (session->start_s >= session->stop_s)
      throw ConfigError("session.start_s: must be before stop_s");
    if (session->stop_s > duration_s) throw ConfigError("session.stop_s: exceeds duration_s");
  }
  if (cc.alpha <= 0 || cc.alpha > 1) throw ConfigError("constants.alpha: must be in (0,1]");
  if (cc.beta < 1) throw ConfigError("constants.beta: must be >= 1");
  if (cc.mtu_bytes == 0) throw ConfigError("constants.mtu_bytes: must be positive");
}

}  // namespace mpv
