#include "mpv/video/session_sender.h"

#include <algorithm>

namespace mpv {

SessionSender::SessionSender(Simulator& sim, const VideoParams& params, uint32_t mtu_bytes,
                             std::unique_ptr<Scheduler> scheduler, std::vector<PathSender*> paths,
                             Metrics& metrics)
    : sim_(sim),
      params_(params),
      mtu_bytes_(mtu_bytes),
      scheduler_(std::move(scheduler)),
      paths_(std::move(paths)),
      metrics_(metrics),
      source_(params, mtu_bytes) {
  MPV_REQUIRE(!paths_.empty(), "session needs at least one path");
  for (uint32_t i = 0; i < paths_.size(); ++i) {
    PathSender::SessionHooks hooks;
    hooks.on_media_sent = [this, i](uint64_t fid, uint32_t index, SimTime now) {
      OnMediaSent(i, fid, index, now);
    };
    hooks.on_media_lost = [this](uint64_t fid, uint32_t index, SimTime now) {
      OnMediaLost(fid, index, now);
    };
    paths_[i]->SetSessionHooks(hooks);
  }
}

void SessionSender::ScheduleStart(SimTime t) {
  sim_.ScheduleAt(t, [this] {
    running_ = true;
    OnFrameTick();
    SweepBuffer();
  });
}

void SessionSender::ScheduleStop(SimTime t) {
  sim_.ScheduleAt(t, [this] { running_ = false; });
}

uint64_t SessionSender::TargetBitrateBps() const {
  uint64_t sum = 0;
  for (const auto* p : paths_) sum += p->cc().BandwidthBps();
  return static_cast<uint64_t>(params_.rate_utilization * static_cast<double>(sum));
}

std::vector<PathSnapshot> SessionSender::Snapshots() const {
  std::vector<PathSnapshot> snaps;
  snaps.reserve(paths_.size());
  for (uint32_t i = 0; i < paths_.size(); ++i) snaps.push_back(paths_[i]->Snapshot(i));
  return snaps;
}

void SessionSender::OnFrameTick() {
  if (!running_) return;
  SimTime now = sim_.Now();

  uint64_t target = std::min(TargetBitrateBps(), params_.max_bitrate_bps);
  VideoFrame frame = source_.Generate(now, target);
  metrics_.OnFrameGenerated(frame.fid, frame.gen_ts, frame.size_bytes, frame.is_key);
  for (auto& seg : Packetize(frame, mtu_bytes_)) pending_.push_back(seg);

  double offered_pkts = static_cast<double>(target) / (8.0 * mtu_bytes_);
  scheduler_->OnFrame(Snapshots(), offered_pkts);
  TrySchedule();

  sim_.ScheduleIn(params_.FrameIntervalUs(), [this] { OnFrameTick(); });
}

void SessionSender::TrySchedule() {
  if (pending_.empty()) return;
  std::vector<PacketToSchedule> pkts;
  pkts.reserve(pending_.size());
  for (size_t i = 0; i < pending_.size(); ++i) {
    pkts.push_back(PacketToSchedule{i, pending_[i].payload_bytes});
  }
  auto snaps = Snapshots();
  auto decision = scheduler_->Assign(pkts, snaps);
  if (!decision) return;  // no usable path yet; retry next frame tick

  for (size_t i = 0; i < pending_.size(); ++i) {
    const Segment& seg = pending_[i];
    buffer_[{seg.fid, seg.index}] = Buffered{seg, 0, false};
    paths_[(*decision)[i]]->pacer().Enqueue(seg);
  }
  pending_.clear();
}

void SessionSender::OnMediaSent(uint32_t, uint64_t fid, uint32_t index, SimTime now) {
  auto it = buffer_.find({fid, index});
  if (it != buffer_.end() && !it->second.sent) {
    it->second.sent = true;
    it->second.first_sent_ts = now;
  }
}

// Lost segments still in the session buffer are resent immediately on the
// path with the minimal transfer cost; evicted ones are final losses.
void SessionSender::OnMediaLost(uint64_t fid, uint32_t index, SimTime now) {
  auto it = buffer_.find({fid, index});
  if (it == buffer_.end()) {
    final_losses_++;
    return;
  }
  if (it->second.sent && now - it->second.first_sent_ts > params_.sender_retention_us) {
    buffer_.erase(it);
    final_losses_++;
    return;
  }
  auto snaps = Snapshots();
  auto target = MinCostScheduler::ArgMinCost(snaps);
  if (!target) {
    final_losses_++;
    return;
  }
  retransmissions_++;
  paths_[*target]->pacer().Enqueue(it->second.segment);
}

void SessionSender::SweepBuffer() {
  if (!running_) return;
  SimTime now = sim_.Now();
  for (auto it = buffer_.begin(); it != buffer_.end();) {
    if (it->second.sent &&
        now - it->second.first_sent_ts > params_.sender_retention_us) {
      it = buffer_.erase(it);
    } else {
      ++it;
    }
  }
  sim_.ScheduleIn(params_.sender_retention_us, [this] { SweepBuffer(); });
}

}  // namespace mpv
