#ifndef MPV_FLOW_PATH_SENDER_H
#define MPV_FLOW_PATH_SENDER_H

#include <functional>
#include <map>
#include <memory>
#include <utility>

#include "mpv/cc/controller.h"
#include "mpv/cc/pacer.h"
#include "mpv/link.h"
#include "mpv/metrics/metrics.h"
#include "mpv/sched/scheduler.h"
#include "mpv/simulator.h"

namespace mpv {

// Sending endpoint of one flow on one path: congestion controller, pacer,
// transport sequencing, and sender-side loss detection. A packet is
// declared lost once three higher sequences were acked on the path or its
// age exceeds the retransmission timeout (srtt + 4 * rttvar, which decays
// to roughly one RTT when the path delay is steady).
class PathSender {
 public:
  struct SessionHooks {
    std::function<void(uint64_t fid, uint32_t index, SimTime now)> on_media_sent;
    std::function<void(uint64_t fid, uint32_t index, SimTime now)> on_media_lost;
    std::function<void(SimTime now)> on_feedback;
  };

  PathSender(Simulator& sim, uint32_t flow_id, std::unique_ptr<CongestionController> cc,
             DropTailLink& link, Metrics& metrics, uint32_t mtu_bytes);

  void ScheduleStart(SimTime t);
  void ScheduleStop(SimTime t);
  void SetSessionHooks(SessionHooks hooks) { hooks_ = std::move(hooks); }

  void OnFeedback(const Feedback& fb);

  PathSnapshot Snapshot(uint32_t path_index) const;

  uint32_t flow_id() const { return flow_id_; }
  Pacer& pacer() { return pacer_; }
  CongestionController& cc() { return *cc_; }
  const CongestionController& cc() const { return *cc_; }
  uint64_t declared_losses() const { return declared_losses_; }

  static constexpr int kDupAckThreshold = 3;

 private:
  struct Outstanding {
    uint32_t bytes;
    SimTime sent_ts;
    bool is_media;
    uint64_t fid;
    uint32_t index;
    int higher_acked = 0;
  };

  void SendPacket(const Segment* seg, uint32_t bytes);
  void DetectLosses(SimTime now, uint64_t acked_seq);
  void SweepTimeouts(SimTime now);
  void DeclareLost(uint64_t seq, const Outstanding& info, SimTime now);
  SimTime LossTimeoutUs() const;

  Simulator& sim_;
  uint32_t flow_id_;
  std::unique_ptr<CongestionController> cc_;
  DropTailLink& link_;
  Metrics& metrics_;
  Pacer pacer_;
  SessionHooks hooks_;

  uint64_t next_seq_ = 1;
  std::map<uint64_t, Outstanding> outstanding_;
  uint64_t declared_losses_ = 0;
  bool running_ = false;

  // Jacobson estimator for the loss timeout, independent of the
  // controller's srtt (which the delay variant zeroes on backoff).
  double rto_srtt_us_ = 0;
  double rto_var_us_ = 0;
};

}  // namespace mpv

#endif  // MPV_FLOW_PATH_SENDER_H
