#include "mpv/simulator.h"

#include <utility>

namespace mpv {

Simulator::EventHandle Simulator::ScheduleAt(SimTime t, Callback cb) {
  MPV_REQUIRE(t >= now_, "ScheduleAt: fire time " + std::to_string(t) +
                             " is before current clock " + std::to_string(now_));
  uint64_t id = next_seq_++;
  queue_.push(Event{t, id, std::move(cb)});
  return EventHandle{id};
}

uint64_t Simulator::RunUntil(SimTime t_end) {
  MPV_REQUIRE(!running_, "RunUntil: engine already running");
  running_ = true;
  uint64_t processed = 0;
  while (!queue_.empty() && queue_.top().fire_time <= t_end) {
    Event ev = queue_.top();
    queue_.pop();
    auto it = cancelled_.find(ev.seq);
    if (it != cancelled_.end()) {
      cancelled_.erase(it);
      continue;
    }
    now_ = ev.fire_time;
    ev.cb();
    ++processed;
  }
  now_ = t_end;
  running_ = false;
  return processed;
}

}  // namespace mpv
