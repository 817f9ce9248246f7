#ifndef MPV_CC_PACER_H
#define MPV_CC_PACER_H

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>

#include "mpv/cc/controller.h"
#include "mpv/packet.h"
#include "mpv/simulator.h"

namespace mpv {

// Releases the path-local send buffer at the controller's pacing rate.
// Token bucket with a one-MTU burst allowance; when the buffer is empty
// and padding is enabled, emits MTU-sized padding packets so bandwidth
// probing never starves.
class Pacer {
 public:
  // segment == nullptr signals a padding release.
  using SendFn = std::function<void(const Segment* segment, uint32_t bytes)>;

  Pacer(Simulator& sim, CongestionController& cc, uint32_t mtu_bytes)
      : sim_(sim), cc_(cc), mtu_bytes_(mtu_bytes), tokens_(mtu_bytes) {}

  void SetSendFn(SendFn fn) { send_ = std::move(fn); }
  void SetPaddingEnabled(bool on) { padding_enabled_ = on; }

  void SetActive(bool active);
  void Enqueue(const Segment& seg);

  // Accrues tokens at the rate in force; call before the controller
  // changes rate so the elapsed interval is billed correctly.
  void SyncTokens();
  // Re-evaluates the release timer after controller state changed.
  void OnRateChanged();

  uint64_t pending_bytes() const { return pending_bytes_; }
  size_t pending_packets() const { return buffer_.size(); }
  bool active() const { return active_; }

 private:
  void Poll();
  void CancelWake();

  Simulator& sim_;
  CongestionController& cc_;
  uint32_t mtu_bytes_;
  SendFn send_;

  std::deque<Segment> buffer_;
  uint64_t pending_bytes_ = 0;
  bool padding_enabled_ = false;
  bool active_ = false;

  double tokens_ = 0.0;  // bytes
  SimTime last_refill_ts_ = 0;
  std::optional<Simulator::EventHandle> wake_;
};

}  // namespace mpv

#endif  // MPV_CC_PACER_H
