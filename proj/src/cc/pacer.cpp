#include "mpv/cc/pacer.h"

#include <algorithm>
#include <cmath>

namespace mpv {

void Pacer::SetActive(bool active) {
  if (active_ == active) return;
  active_ = active;
  if (active_) {
    last_refill_ts_ = sim_.Now();
    tokens_ = mtu_bytes_;  // fresh bucket, one-packet burst
    Poll();
  } else {
    CancelWake();
  }
}

void Pacer::Enqueue(const Segment& seg) {
  buffer_.push_back(seg);
  pending_bytes_ += seg.payload_bytes;
  if (active_) Poll();
}

void Pacer::SyncTokens() {
  if (!active_) return;
  SimTime now = sim_.Now();
  uint64_t rate = cc_.PacingRateBps();
  double dt_us = static_cast<double>(now - last_refill_ts_);
  tokens_ = std::min(tokens_ + static_cast<double>(rate) * dt_us / 8e6, static_cast<double>(mtu_bytes_));
  last_refill_ts_ = now;
}

void Pacer::OnRateChanged() {
  if (!active_) return;
  Poll();
}

void Pacer::CancelWake() {
  if (wake_) {
    sim_.Cancel(*wake_);
    wake_.reset();
  }
}

void Pacer::Poll() {
  CancelWake();
  SyncTokens();
  while (true) {
    const Segment* seg = nullptr;
    uint32_t size = mtu_bytes_;
    if (!buffer_.empty()) {
      seg = &buffer_.front();
      size = seg->payload_bytes;
    } else if (!padding_enabled_) {
      return;  // nothing to send, nothing to time
    }
    if (!cc_.CanSend(size)) return;  // window-gated; acks re-poll us

    uint64_t rate = cc_.PacingRateBps();
    if (tokens_ + 1e-9 < size) {
      if (rate == 0) return;  // idle until a rate is set
      double deficit_bytes = static_cast<double>(size) - tokens_;
      SimTime dt = static_cast<SimTime>(std::ceil(deficit_bytes * 8e6 / static_cast<double>(rate)));
      wake_ = sim_.ScheduleIn(std::max<SimTime>(dt, 1), [this] {
        wake_.reset();
        Poll();
      });
      return;
    }

    tokens_ -= size;
    if (seg) {
      Segment out = buffer_.front();
      buffer_.pop_front();
      pending_bytes_ -= out.payload_bytes;
      send_(&out, out.payload_bytes);
    } else {
      send_(nullptr, size);
    }
  }
}

}  // namespace mpv
