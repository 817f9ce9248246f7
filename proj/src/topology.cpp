#include "mpv/topology.h"

#include <string>

namespace mpv {
namespace {

constexpr uint64_t kMbps = 1000000;

// Single bottleneck: bandwidth sweep 3/4/5 Mbps x queue 300/400/600 ms,
// one-way delay 100 ms throughout.
const PathConfig kTable1[9] = {
    {3 * kMbps, 100, 300}, {3 * kMbps, 100, 400}, {3 * kMbps, 100, 600},
    {4 * kMbps, 100, 300}, {4 * kMbps, 100, 400}, {4 * kMbps, 100, 600},
    {5 * kMbps, 100, 300}, {5 * kMbps, 100, 400}, {5 * kMbps, 100, 600},
};

// Two-path matrix, (BW Mbps, OWD ms, Q ms) per link.
const PathConfig kTable3[10][2] = {
    {{4 * kMbps, 100, 200}, {4 * kMbps, 100, 200}},
    {{3 * kMbps, 100, 200}, {2 * kMbps, 150, 200}},
    {{3 * kMbps, 100, 200}, {2 * kMbps, 100, 200}},
    {{4 * kMbps, 100, 200}, {2 * kMbps, 50, 200}},
    {{4 * kMbps, 50, 200}, {2 * kMbps, 100, 200}},
    {{4 * kMbps, 50, 200}, {4 * kMbps, 50, 200}},
    {{3 * kMbps, 100, 200}, {3 * kMbps, 100, 200}},
    {{4 * kMbps, 100, 200}, {3 * kMbps, 150, 200}},
    {{4 * kMbps, 150, 200}, {3 * kMbps, 50, 200}},
    {{2 * kMbps, 100, 200}, {3 * kMbps, 100, 200}},
};

}  // namespace

TopologySpec BuildTopology(int table, int case_id) {
  TopologySpec spec;
  spec.table = table;
  spec.case_id = case_id;
  if (table == 1) {
    MPV_REQUIRE(case_id >= 1 && case_id <= 9,
                "table 1 has cases 1..9, got case " + std::to_string(case_id));
    spec.paths.push_back(kTable1[case_id - 1]);
  } else if (table == 3) {
    MPV_REQUIRE(case_id >= 1 && case_id <= 10,
                "table 3 has cases 1..10, got case " + std::to_string(case_id));
    spec.paths.push_back(kTable3[case_id - 1][0]);
    spec.paths.push_back(kTable3[case_id - 1][1]);
  } else {
    MPV_REQUIRE(false, "unknown topology table " + std::to_string(table));
  }
  return spec;
}

}  // namespace mpv
