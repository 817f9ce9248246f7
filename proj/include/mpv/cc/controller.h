#ifndef MPV_CC_CONTROLLER_H
#define MPV_CC_CONTROLLER_H

#include <cstdint>
#include <string>

#include "mpv/common.h"

namespace mpv {

enum class CcMode : uint8_t { kStartUp, kDrain, kProbeBw, kProbeRtt };

inline const char* CcModeName(CcMode m) {
  switch (m) {
    case CcMode::kStartUp:
      return "StartUp";
    case CcMode::kDrain:
      return "Drain";
    case CcMode::kProbeBw:
      return "ProbeBW";
    case CcMode::kProbeRtt:
      return "ProbeRTT";
  }
  return "?";
}

// Per-path congestion controller. One instance per path, mutated only by
// that path's events; a real-network port would need external serialization
// of OnPacketSent/OnAck per path.
class CongestionController {
 public:
  virtual ~CongestionController() = default;

  virtual void OnPacketSent(SimTime now, uint64_t seq, uint32_t payload_bytes) = 0;
  virtual void OnAck(SimTime now, uint64_t seq) = 0;
  // Loss signal from the sender's gap detector; removes the record from the
  // inflight ledger.
  virtual void OnPacketLost(SimTime now, uint64_t seq) = 0;

  virtual uint64_t PacingRateBps() const = 0;
  // Window/inflight gate, checked by the pacer before each release.
  virtual bool CanSend(uint32_t bytes) const = 0;

  virtual CcMode mode() const = 0;
  virtual const char* ModeString() const = 0;
  virtual uint64_t BandwidthBps() const = 0;
  virtual double SrttMs() const = 0;
  virtual double MinRttMs() const = 0;
  virtual double LastRttMs() const = 0;
  virtual uint64_t InflightBytes() const = 0;
  // Congestion reference of the delay threshold; infinity right after a
  // backoff, 0 where the controller has no such notion.
  virtual double BaseRttMs() const { return 0; }
};

}  // namespace mpv

#endif  // MPV_CC_CONTROLLER_H
