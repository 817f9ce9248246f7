#include "mpv/common.h"
#include "mpv/sched/scheduler.h"

namespace mpv {

std::unique_ptr<Scheduler> MakeScheduler(const std::string& name, const SchedParams& params) {
  if (name == "min_cost") return std::make_unique<MinCostScheduler>();
  if (name == "wrr") return std::make_unique<WrrScheduler>(params.wrr_round_n);
  if (name == "edcld") return std::make_unique<EdcldScheduler>(params.edcld_weight, params.mtu_bytes);
  if (name == "sfl") return std::make_unique<SflScheduler>();
  MPV_REQUIRE(false, "unknown scheduler '" + name + "' (expected min_cost|wrr|edcld|sfl)");
  return nullptr;
}

}  // namespace mpv
