#ifndef MPV_RUN_CONFIG_H
#define MPV_RUN_CONFIG_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpv/cc/constants.h"
#include "mpv/sched/scheduler.h"
#include "mpv/video/source.h"

namespace mpv {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct FlowSpec {
  std::string cc;  // delay_bbr | baseline_bbr | aimd
  double start_s = 0;
  double stop_s = 0;
  int path = 0;
};

struct SessionSpec {
  std::string scheduler;  // min_cost | wrr | edcld | sfl
  uint64_t max_bitrate_bps = 2000000;
  double frame_rate_fps = 25.0;
  std::vector<int> paths;
  double start_s = 0;
  double stop_s = 0;  // 0 = run duration
};

// A fully resolved experiment: parsing applies all defaults, so the JSON
// echo reproduces the run bit-exactly.
struct ExperimentConfig {
  std::string name;
  int table = 1;
  int case_id = 1;
  double duration_s = 300;
  uint64_t seed = 1;
  std::vector<FlowSpec> flows;
  std::optional<SessionSpec> session;

  CcConstants cc;
  SchedParams sched;
  VideoParams video;

  static ExperimentConfig FromJsonText(const std::string& text);
  static ExperimentConfig FromJsonFile(const std::string& path);
  std::string ToJsonText() const;

  // Throws ConfigError naming the offending field.
  void Validate() const;
};

}  // namespace mpv

#endif  // MPV_RUN_CONFIG_H
