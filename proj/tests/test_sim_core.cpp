#include <vector>

#include "doctest.h"
#include "mpv/simulator.h"

using namespace mpv;

TEST_CASE("events fire in time order") {
  Simulator sim;
  std::vector<int> order;
  sim.ScheduleAt(MsToUs(1), [&] { order.push_back(2); });
  sim.ScheduleAt(0, [&] { order.push_back(1); });
  sim.RunUntil(MsToUs(10));
  CHECK(order == std::vector<int>{1, 2});
}

TEST_CASE("identical fire times break ties by insertion order") {
  Simulator sim;
  std::vector<int> order;
  for (int i = 0; i < 16; ++i) {
    sim.ScheduleAt(MsToUs(5), [&order, i] { order.push_back(i); });
  }
  sim.RunUntil(MsToUs(5));
  for (int i = 0; i < 16; ++i) CHECK(order[i] == i);
}

TEST_CASE("cancelled events are never delivered") {
  Simulator sim;
  bool fired = false;
  auto h = sim.ScheduleAt(MsToUs(3), [&] { fired = true; });
  sim.Cancel(h);
  uint64_t n = sim.RunUntil(MsToUs(10));
  CHECK_FALSE(fired);
  CHECK(n == 0);
}

TEST_CASE("run_until on an empty queue advances the clock") {
  Simulator sim;
  uint64_t n = sim.RunUntil(SecToUs(300));
  CHECK(n == 0);
  CHECK(sim.Now() == SecToUs(300));
}

TEST_CASE("single event inside the horizon is processed") {
  Simulator sim;
  int hits = 0;
  sim.ScheduleAt(SecToUs(150), [&] { hits++; });
  uint64_t n = sim.RunUntil(SecToUs(300));
  CHECK(n == 1);
  CHECK(hits == 1);
}

TEST_CASE("events beyond the horizon stay queued") {
  Simulator sim;
  int hits = 0;
  sim.ScheduleAt(SecToUs(150), [&] { hits++; });
  CHECK(sim.RunUntil(SecToUs(100)) == 0);
  CHECK(hits == 0);
  CHECK(sim.RunUntil(SecToUs(200)) == 1);
  CHECK(hits == 1);
}

TEST_CASE("scheduling in the past is a contract violation") {
  Simulator sim;
  sim.ScheduleAt(MsToUs(10), [] {});
  sim.RunUntil(MsToUs(20));
  CHECK_THROWS_AS(sim.ScheduleAt(MsToUs(5), [] {}), ContractError);
}

TEST_CASE("nested run_until is rejected") {
  Simulator sim;
  bool threw = false;
  sim.ScheduleAt(1, [&] {
    try {
      sim.RunUntil(MsToUs(1));
    } catch (const ContractError&) {
      threw = true;
    }
  });
  sim.RunUntil(MsToUs(2));
  CHECK(threw);
}

TEST_CASE("events scheduled while running still fire in order") {
  Simulator sim;
  std::vector<int> order;
  sim.ScheduleAt(MsToUs(1), [&] {
    order.push_back(1);
    sim.ScheduleAt(sim.Now(), [&] { order.push_back(2); });  // same instant, runs after
    sim.ScheduleAt(MsToUs(2), [&] { order.push_back(3); });
  });
  sim.RunUntil(MsToUs(3));
  CHECK(order == std::vector<int>{1, 2, 3});
}

TEST_CASE("seeded rng streams are reproducible") {
  Simulator a(42), b(42), c(43);
  CHECK(a.Rng()() == b.Rng()());
  CHECK(a.Rng()() == b.Rng()());
  bool all_equal = true;
  for (int i = 0; i < 4; ++i) all_equal = all_equal && (a.Rng()() == c.Rng()());
  CHECK_FALSE(all_equal);
}
