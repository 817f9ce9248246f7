#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpv/run/compare.h"
#include "mpv/run/config.h"
#include "mpv/run/runner.h"

namespace {

int CmdRun(const std::string& config_path, const std::string& out_dir, long long seed,
           double duration) {
  mpv::ExperimentConfig cfg = mpv::ExperimentConfig::FromJsonFile(config_path);
  if (seed >= 0) cfg.seed = static_cast<uint64_t>(seed);
  if (duration > 0) {
    cfg.duration_s = duration;
    std::erase_if(cfg.flows, [&](const mpv::FlowSpec& f) { return f.start_s >= duration; });
    for (auto& f : cfg.flows) f.stop_s = std::min(f.stop_s, duration);
    if (cfg.session) {
      if (cfg.session->start_s >= duration) {
        cfg.session.reset();
      } else {
        cfg.session->stop_s = std::min(cfg.session->stop_s, duration);
      }
    }
  }
  cfg.Validate();

  mpv::RunResult result = mpv::RunExperiment(cfg);
  mpv::WriteOutputs(result, cfg, out_dir);

  std::printf("%s: %llu events, outputs in %s\n", cfg.name.c_str(),
              static_cast<unsigned long long>(result.events_processed), out_dir.c_str());
  std::printf("%s", mpv::CompareTable({out_dir}).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mpvsim - multipath real-time video transport simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  long long seed = -1;
  double duration = 0;
  auto* run = app.add_subcommand("run", "run one experiment config");
  run->add_option("config", config_path, "experiment config (JSON)")->required();
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--seed", seed, "override the config seed");
  run->add_option("--duration", duration, "override the run duration (seconds)");

  std::vector<std::string> dirs;
  auto* compare = app.add_subcommand("compare", "tabulate summaries of completed runs");
  compare->add_option("dirs", dirs, "run output directories")->required()->expected(-2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return CmdRun(config_path, out_dir, seed, duration);
    std::printf("%s", mpv::CompareTable(dirs).c_str());
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
