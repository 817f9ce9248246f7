#ifndef MPV_SCHED_SCHEDULER_H
#define MPV_SCHED_SCHEDULER_H

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mpv {

// Scheduler-facing view of one path at decision time. rtt is the latest
// raw sample, not the smoothed filter; owd is rtt/2.
struct PathSnapshot {
  uint32_t path_id = 0;
  double rtt_ms = 0;
  uint64_t pending_bytes = 0;    // Q_p, local send buffer
  uint64_t pacing_rate_bps = 0;  // c_p
  uint64_t abw_bps = 0;          // bandwidth estimate
  double owd_ms = 0;
};

struct PacketToSchedule {
  uint64_t packet_id = 0;
  uint32_t size_bytes = 0;
};

struct SchedParams {
  uint32_t mtu_bytes = 1000;
  int wrr_round_n = 8;
  double edcld_weight = 0.8;  // w in the hybrid cost
};

// Maps each packet of a batch to a path. Stateful across batches where the
// algorithm calls for it (WRR rounds, EDCLD split ratios). Returns nullopt
// when no path is currently usable; the caller keeps the batch and retries.
class Scheduler {
 public:
  virtual ~Scheduler() = default;
  virtual const char* Name() const = 0;
  // result[i] = index into `snapshots` for packets[i]
  virtual std::optional<std::vector<uint32_t>> Assign(const std::vector<PacketToSchedule>& packets,
                                                      std::vector<PathSnapshot>& snapshots) = 0;
  // Called once per frame arrival, before Assign. offered_pkts_per_sec is
  // the current frame bitrate expressed in MTU packets.
  virtual void OnFrame(const std::vector<PathSnapshot>& snapshots, double offered_pkts_per_sec) {
    (void)snapshots;
    (void)offered_pkts_per_sec;
  }
};

// Proposed scheduler: per packet, assign to argmin of
//   lambda_p = RTT_p/2 + Q_p/c_p
// then grow that path's Q_p by the packet size before costing the next one.
class MinCostScheduler : public Scheduler {
 public:
  const char* Name() const override { return "min_cost"; }
  std::optional<std::vector<uint32_t>> Assign(const std::vector<PacketToSchedule>& packets,
                                              std::vector<PathSnapshot>& snapshots) override;

  // Path cost in milliseconds; shared with the retransmission policy.
  static double PathCostMs(const PathSnapshot& s);
  // Lowest-cost usable path, or nullopt when none has a positive pacing
  // rate. Ties go to the lowest path index.
  static std::optional<uint32_t> ArgMinCost(const std::vector<PathSnapshot>& snapshots);
};

// Weighted round robin over bandwidth estimates: per round, path i takes
// ceil(n * ABW_i / sum ABW) packets, dealt in path order. Round state
// persists across batches.
class WrrScheduler : public Scheduler {
 public:
  explicit WrrScheduler(int round_n) : round_n_(round_n) {}
  const char* Name() const override { return "wrr"; }
  std::optional<std::vector<uint32_t>> Assign(const std::vector<PacketToSchedule>& packets,
                                              std::vector<PathSnapshot>& snapshots) override;

 private:
  int round_n_;
  std::vector<uint64_t> quota_;
  size_t cursor_ = 0;
  bool round_active_ = false;
};

// Split-ratio scheduler with the hybrid M/M/1 cost
//   C_p(psi_p) = D_p + (1-w)/(mu_p - psi_p*lambda) + w*q_p/mu_p.
// Each frame, one best/worst pair is rebalanced by solving
// C_best(psi_best + d) = C_worst(psi_worst - d); the other ratios stay.
class EdcldScheduler : public Scheduler {
 public:
  explicit EdcldScheduler(double weight, uint32_t mtu_bytes) : w_(weight), mtu_bytes_(mtu_bytes) {}
  const char* Name() const override { return "edcld"; }
  std::optional<std::vector<uint32_t>> Assign(const std::vector<PacketToSchedule>& packets,
                                              std::vector<PathSnapshot>& snapshots) override;
  void OnFrame(const std::vector<PathSnapshot>& snapshots, double offered_pkts_per_sec) override;

  const std::vector<double>& ratios() const { return ratio_; }
  // Exposed for the rebalance step; also used directly by tests.
  std::vector<double> Costs(const std::vector<PathSnapshot>& snapshots, double lambda) const;
  void Rebalance(const std::vector<PathSnapshot>& snapshots, double lambda);

 private:
  void EnsureInit(size_t n);

  double w_;
  uint32_t mtu_bytes_;
  std::vector<double> ratio_;
  std::vector<double> dealt_;
  double total_dealt_ = 0;
};

// SFL water filling: raise a delay level over the per-path OWDs until the
// per-path byte budgets (D - owd) * abw hold the batch, then deal packets
// to paths in OWD order while budgets last.
class SflScheduler : public Scheduler {
 public:
  const char* Name() const override { return "sfl"; }
  std::optional<std::vector<uint32_t>> Assign(const std::vector<PacketToSchedule>& packets,
                                              std::vector<PathSnapshot>& snapshots) override;
};

std::unique_ptr<Scheduler> MakeScheduler(const std::string& name, const SchedParams& params);

}  // namespace mpv

#endif  // MPV_SCHED_SCHEDULER_H
