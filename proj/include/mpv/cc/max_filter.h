#ifndef MPV_CC_MAX_FILTER_H
#define MPV_CC_MAX_FILTER_H

#include <cstdint>
#include <deque>
#include <utility>

namespace mpv {

// Windowed max over samples keyed by a monotonically non-decreasing clock.
// The window length is supplied per update, so callers can scale it with
// the current round-trip time.
class WindowedMaxFilter {
 public:
  void Update(uint64_t key, double value, uint64_t window) {
    while (!samples_.empty() && samples_.back().second <= value) {
      samples_.pop_back();
    }
    samples_.emplace_back(key, value);
    while (!samples_.empty() && samples_.front().first + window <= key) {
      samples_.pop_front();
    }
  }

  double Max() const { return samples_.empty() ? 0.0 : samples_.front().second; }
  bool Empty() const { return samples_.empty(); }

 private:
  std::deque<std::pair<uint64_t, double>> samples_;  // key, value; value decreasing
};

}  // namespace mpv

#endif  // MPV_CC_MAX_FILTER_H
