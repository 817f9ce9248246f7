#ifndef MPV_COMMON_H
#define MPV_COMMON_H

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mpv {

// Virtual time, microseconds since simulation start.
using SimTime = uint64_t;

constexpr SimTime kUsPerMs = 1000;
constexpr SimTime kUsPerSec = 1000000;

constexpr SimTime MsToUs(uint64_t ms) { return ms * kUsPerMs; }
constexpr SimTime SecToUs(uint64_t s) { return s * kUsPerSec; }
constexpr double UsToMs(SimTime t) { return static_cast<double>(t) / 1000.0; }
constexpr double UsToSec(SimTime t) { return static_cast<double>(t) / 1e6; }

// Contract violation. Thrown instead of aborting so tests can observe it;
// an escaped ContractError terminates the process with the diagnostic.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

[[noreturn]] inline void ContractFail(const char* file, int line, const std::string& msg) {
  std::ostringstream os;
  os << file << ":" << line << ": contract violation: " << msg;
  throw ContractError(os.str());
}

#define MPV_REQUIRE(cond, msg)                        \
  do {                                                \
    if (!(cond)) {                                    \
      ::mpv::ContractFail(__FILE__, __LINE__, (msg)); \
    }                                                 \
  } while (0)

}  // namespace mpv

#endif  // MPV_COMMON_H
