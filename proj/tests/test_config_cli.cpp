#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "mpv/run/compare.h"
#include "mpv/run/config.h"
#include "mpv/run/runner.h"
#include "test_util.h"

using namespace mpv;

namespace {

const char* kMinimalConfig = R"({
  "name": "demo",
  "topology": {"table": 1, "case": 2},
  "duration_s": 12,
  "seed": 3,
  "flows": [{"cc": "delay_bbr", "start_s": 0, "stop_s": 12, "path": 0}]
})";

std::string TempDir(const std::string& leaf) {
  auto dir = std::filesystem::temp_directory_path() / "mpvsim_test" / leaf;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("minimal config parses with defaults resolved") {
  auto cfg = ExperimentConfig::FromJsonText(kMinimalConfig);
  cfg.Validate();
  CHECK(cfg.name == "demo");
  CHECK(cfg.case_id == 2);
  CHECK(cfg.seed == 3);
  CHECK(cfg.cc.alpha == doctest::Approx(0.9));
  CHECK(cfg.cc.beta == doctest::Approx(1.2));
  CHECK(cfg.cc.mtu_bytes == 1000);
  CHECK(cfg.sched.edcld_weight == doctest::Approx(0.8));
  CHECK_FALSE(cfg.session.has_value());
}

TEST_CASE("validation errors name the offending field") {
  auto base = ExperimentConfig::FromJsonText(kMinimalConfig);

  auto bad_cc = base;
  bad_cc.flows[0].cc = "cubic";
  CHECK_THROWS_WITH_AS(bad_cc.Validate(), doctest::Contains("flows[0].cc"), ConfigError);

  auto bad_path = base;
  bad_path.flows[0].path = 4;
  CHECK_THROWS_WITH_AS(bad_path.Validate(), doctest::Contains("flows[0].path"), ConfigError);

  auto bad_stop = base;
  bad_stop.flows[0].stop_s = 99;
  CHECK_THROWS_WITH_AS(bad_stop.Validate(), doctest::Contains("stop_s"), ConfigError);

  auto bad_case = base;
  bad_case.case_id = 42;
  CHECK_THROWS_WITH_AS(bad_case.Validate(), doctest::Contains("topology"), ConfigError);

  auto bad_sched = base;
  bad_sched.session = SessionSpec{};
  bad_sched.session->scheduler = "fifo";
  bad_sched.session->paths = {0};
  bad_sched.session->stop_s = 10;
  CHECK_THROWS_WITH_AS(bad_sched.Validate(), doctest::Contains("session.scheduler"), ConfigError);

  CHECK_THROWS_AS(ExperimentConfig::FromJsonText("{nope"), ConfigError);
  CHECK_THROWS_AS(ExperimentConfig::FromJsonFile("/no/such/file.json"), ConfigError);
}

TEST_CASE("the json echo reproduces itself bit-exactly") {
  auto cfg = ExperimentConfig::FromJsonText(kMinimalConfig);
  std::string echo1 = cfg.ToJsonText();
  auto cfg2 = ExperimentConfig::FromJsonText(echo1);
  CHECK(cfg2.ToJsonText() == echo1);
}

TEST_CASE("a session config round-trips through the echo") {
  auto cfg = testutil::SessionConfig("sfl", 4, 20.0);
  std::string echo = cfg.ToJsonText();
  auto back = ExperimentConfig::FromJsonText(echo);
  back.Validate();
  REQUIRE(back.session.has_value());
  CHECK(back.session->scheduler == "sfl");
  CHECK(back.session->paths == std::vector<int>{0, 1});
  CHECK(back.ToJsonText() == echo);
}

TEST_CASE("write, read back, and compare summaries") {
  auto cfg = testutil::FlowConfig("delay_bbr", 1, 1, 8.0);
  cfg.name = "cmp_demo";
  auto result = RunExperiment(cfg);
  std::string dir_a = TempDir("a");
  std::string dir_b = TempDir("b");
  WriteOutputs(result, cfg, dir_a);
  auto result2 = RunExperiment(cfg);
  WriteOutputs(result2, cfg, dir_b);

  auto info = ReadSummary(dir_a);
  CHECK(info.scenario == "cmp_demo");
  CHECK(info.pooled_owd_ms > 0);
  CHECK_FALSE(info.has_frames);

  // Identical configs and seeds: identical summaries.
  std::ifstream fa(dir_a + "/summary.csv"), fb(dir_b + "/summary.csv");
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());

  std::string table = CompareTable({dir_a, dir_b});
  CHECK(table.find("cmp_demo") != std::string::npos);

  CHECK_THROWS_WITH_AS(ReadSummary(TempDir("empty")), doctest::Contains("missing summary"),
                       ConfigError);

  std::string dir_c = TempDir("c");
  std::ofstream(dir_c + "/summary.csv") << "# not-a-summary v9\npooled,x\n";
  CHECK_THROWS_WITH_AS(ReadSummary(dir_c), doctest::Contains("schema mismatch"), ConfigError);
}

#ifdef MPV_SCENARIO_DIR
TEST_CASE("every bundled scenario validates") {
  size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(MPV_SCENARIO_DIR)) {
    if (entry.path().extension() != ".json") continue;
    auto cfg = ExperimentConfig::FromJsonFile(entry.path().string());
    CHECK_NOTHROW(cfg.Validate());
    CHECK(cfg.duration_s == 300);
    seen++;
  }
  CHECK(seen == 59);
}
#endif

TEST_CASE("config echo lands next to the traces") {
  auto cfg = testutil::FlowConfig("aimd", 1, 1, 4.0);
  auto result = RunExperiment(cfg);
  std::string dir = TempDir("outputs");
  WriteOutputs(result, cfg, dir);
  CHECK(std::filesystem::exists(dir + "/flow_trace.csv"));
  CHECK(std::filesystem::exists(dir + "/frame_trace.csv"));
  CHECK(std::filesystem::exists(dir + "/summary.csv"));
  auto echoed = ExperimentConfig::FromJsonFile(dir + "/config.json");
  CHECK(echoed.ToJsonText() == cfg.ToJsonText());
}
