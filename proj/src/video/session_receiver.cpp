#include "mpv/video/session_receiver.h"

namespace mpv {

void SessionReceiver::OnSegment(SimTime now, const Segment& seg, uint32_t path_index) {
  auto it = frames_.find(seg.fid);
  if (it == frames_.end()) {
    Reassembly r;
    r.have.assign(seg.total_segments, false);
    r.first_arrival = now;
    r.gen_ts = seg.gen_ts;
    r.is_key = seg.is_key;
    it = frames_.emplace(seg.fid, std::move(r)).first;
    if (!seg.is_key) {
      // waiting time must exceed the threshold, hence the +1
      uint64_t fid = seg.fid;
      sim_.ScheduleIn(params_.receiver_wait_us + 1, [this, fid] { ExpireFrame(fid); });
    }
  }
  Reassembly& r = it->second;
  if (r.state != FrameState::kPending || r.have[seg.index]) {
    duplicates_ignored_++;
    return;
  }
  r.have[seg.index] = true;
  r.have_count++;
  r.bytes += seg.payload_bytes;
  r.paths_mask |= 1u << path_index;
  if (r.have_count == r.have.size()) {
    r.state = FrameState::kDelivered;
    frames_delivered_++;
    metrics_.OnFrameDelivered(seg.fid, now, r.paths_mask, r.bytes);
  }
}

void SessionReceiver::ExpireFrame(uint64_t fid) {
  auto it = frames_.find(fid);
  if (it == frames_.end()) return;
  Reassembly& r = it->second;
  if (r.state != FrameState::kPending || r.is_key) return;
  r.state = FrameState::kDropped;
  frames_dropped_++;
  metrics_.OnFrameDropped(fid, sim_.Now());
}

}  // namespace mpv
