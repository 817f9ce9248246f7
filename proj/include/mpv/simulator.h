#ifndef MPV_SIMULATOR_H
#define MPV_SIMULATOR_H

#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <unordered_set>
#include <vector>

#include "mpv/common.h"

namespace mpv {

// Single-threaded discrete-event engine. Events fire in (fire_time,
// insertion order). Components must only be touched from event callbacks;
// there is no cross-thread contract.
class Simulator {
 public:
  using Callback = std::function<void()>;

  struct EventHandle {
    uint64_t id = 0;
  };

  explicit Simulator(uint64_t seed = 1) : rng_(seed) {}

  SimTime Now() const { return now_; }

  // Enqueues a callback at absolute time t. Scheduling in the past is a
  // contract violation.
  EventHandle ScheduleAt(SimTime t, Callback cb);
  EventHandle ScheduleIn(SimTime delay, Callback cb) { return ScheduleAt(now_ + delay, std::move(cb)); }

  // A cancelled event is never delivered. Cancelling an already-fired or
  // unknown handle is a no-op.
  void Cancel(EventHandle h) { cancelled_.insert(h.id); }

  // Processes every event with fire_time <= t_end, advances the clock to
  // t_end, and returns the number of callbacks delivered.
  uint64_t RunUntil(SimTime t_end);

  std::mt19937_64& Rng() { return rng_; }

 private:
  struct Event {
    SimTime fire_time;
    uint64_t seq;
    Callback cb;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.fire_time != b.fire_time) return a.fire_time > b.fire_time;
      return a.seq > b.seq;
    }
  };

  SimTime now_ = 0;
  uint64_t next_seq_ = 1;
  bool running_ = false;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::unordered_set<uint64_t> cancelled_;
  std::mt19937_64 rng_;
};

}  // namespace mpv

#endif  // MPV_SIMULATOR_H
