#ifndef MPV_VIDEO_SESSION_SENDER_H
#define MPV_VIDEO_SESSION_SENDER_H

#include <deque>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "mpv/flow/path_sender.h"
#include "mpv/metrics/metrics.h"
#include "mpv/sched/scheduler.h"
#include "mpv/simulator.h"
#include "mpv/video/source.h"

namespace mpv {

// Multipath video sender: generates frames at the encoder cadence with the
// bitrate matched to the summed path bandwidth, splits them into segments,
// runs the configured scheduler over per-path snapshots, and retransmits
// segments reported lost while they are still in the session buffer.
class SessionSender {
 public:
  SessionSender(Simulator& sim, const VideoParams& params, uint32_t mtu_bytes,
                std::unique_ptr<Scheduler> scheduler, std::vector<PathSender*> paths,
                Metrics& metrics);

  void ScheduleStart(SimTime t);
  void ScheduleStop(SimTime t);

  Scheduler& scheduler() { return *scheduler_; }
  uint64_t retransmissions() const { return retransmissions_; }
  uint64_t final_losses() const { return final_losses_; }
  size_t session_buffer_size() const { return buffer_.size(); }
  size_t pending_unscheduled() const { return pending_.size(); }

 private:
  struct Buffered {
    Segment segment;
    SimTime first_sent_ts = 0;
    bool sent = false;  // retention age counts from the first emission
  };

  void OnFrameTick();
  void TrySchedule();
  void OnMediaSent(uint32_t path_index, uint64_t fid, uint32_t index, SimTime now);
  void OnMediaLost(uint64_t fid, uint32_t index, SimTime now);
  void SweepBuffer();
  std::vector<PathSnapshot> Snapshots() const;
  uint64_t TargetBitrateBps() const;

  Simulator& sim_;
  VideoParams params_;
  uint32_t mtu_bytes_;
  std::unique_ptr<Scheduler> scheduler_;
  std::vector<PathSender*> paths_;
  Metrics& metrics_;
  FrameSource source_;

  std::deque<Segment> pending_;  // packetized, not yet mapped to a path
  std::map<std::pair<uint64_t, uint32_t>, Buffered> buffer_;
  uint64_t retransmissions_ = 0;
  uint64_t final_losses_ = 0;
  bool running_ = false;
};

}  // namespace mpv

#endif  // MPV_VIDEO_SESSION_SENDER_H
