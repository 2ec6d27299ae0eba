#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "comet/benchmark.hpp"
#include "comet/plot.hpp"

using namespace comet;

namespace {

BenchmarkConfig small_config() {
  BenchmarkConfig c;
  c.counts = {10};
  c.trials = 4;
  c.planners = {PlannerKind::Dwa, PlannerKind::Comet};
  c.bootstrap_resamples = 200;
  c.base.max_steps = 150;
  return c;
}

}  // namespace

TEST(CorridorScenario, ValidAndSeeded) {
  const CorridorConfig c;
  const Scenario base;
  const Scenario a = make_corridor_scenario(30, 77, c, base);
  EXPECT_TRUE(validate_scenario(a).empty());
  EXPECT_EQ(a.agents.size(), 30u);
  EXPECT_EQ(a, make_corridor_scenario(30, 77, c, base));
  EXPECT_NE(a, make_corridor_scenario(30, 78, c, base));
  for (const auto& ag : a.agents) {
    EXPECT_LE(std::abs(ag.position.y), c.halfwidth);
    EXPECT_GE(ag.position.x, c.spawn_start - c.member_spacing);
  }
}

TEST(TrialSeed, DistinctPerTrial) {
  std::set<std::uint64_t> seen;
  for (int count : {10, 20, 30}) {
    for (int i = 0; i < 50; ++i) seen.insert(trial_seed(1, count, i));
  }
  EXPECT_EQ(seen.size(), 150u);
}

TEST(RunBenchmark, CellShapeAndPairedSeeds) {
  BenchmarkConfig c = small_config();
  c.trials = 20;
  c.base.max_steps = 60;
  std::vector<TrialResult> trials;
  const auto report = run_benchmark(c, &trials);
  ASSERT_EQ(report.cells.size(), 2u);
  EXPECT_EQ(report.cells[0].planner, PlannerKind::Dwa);
  EXPECT_EQ(report.cells[1].planner, PlannerKind::Comet);
  for (const auto& cell : report.cells) {
    EXPECT_EQ(cell.count, 10);
    EXPECT_EQ(cell.trials, 20);
    EXPECT_LE(cell.freezing_ci.lo, cell.freezing_rate);
    EXPECT_GE(cell.freezing_ci.hi, cell.freezing_rate);
  }
  std::multiset<std::uint64_t> dwa_seeds, comet_seeds;
  for (const auto& t : trials) {
    (t.planner == PlannerKind::Dwa ? dwa_seeds : comet_seeds).insert(t.seed);
  }
  EXPECT_EQ(dwa_seeds, comet_seeds);
}

TEST(RunBenchmark, ThreadCountDoesNotChangeOutput) {
  BenchmarkConfig one = small_config();
  BenchmarkConfig many = one;
  many.threads = 3;
  const auto a = run_benchmark(one);
  const auto b = run_benchmark(many);
  EXPECT_EQ(a.config_hash, b.config_hash);
  EXPECT_EQ(report_table_csv(a), report_table_csv(b));
  EXPECT_EQ(report_cells_csv(a), report_cells_csv(b));
}

TEST(RunBenchmark, ConfigHashTracksConfig) {
  BenchmarkConfig a = small_config();
  BenchmarkConfig b = a;
  b.base_seed = 2;
  EXPECT_NE(run_benchmark(a).config_hash, run_benchmark(b).config_hash);
}

TEST(BenchmarkConfig, JsonRoundTrip) {
  BenchmarkConfig c = small_config();
  c.corridor.halfwidth = 2.5;
  c.base.params.tau_low = 4.0;
  const json j = c;
  const BenchmarkConfig back = j.get<BenchmarkConfig>();
  EXPECT_EQ(json(back), j);
}

TEST(ReportCsv, LayoutAndComments) {
  const auto report = run_benchmark(small_config());
  const std::string table = report_table_csv(report);
  EXPECT_EQ(table.rfind("# config_hash: " + report.config_hash, 0), 0u);
  const CsvTable t = parse_csv(table);
  EXPECT_EQ(t.header, (std::vector<std::string>{"metric", "method", "10 peds"}));
  ASSERT_EQ(t.rows.size(), 6u);
  EXPECT_EQ(t.rows[0][0], "avg_deviation_deg");
  EXPECT_EQ(t.rows[0][1], "DWA");
  EXPECT_EQ(t.rows[1][1], "DWA+CoMet");

  const CsvTable cells = parse_csv(report_cells_csv(report));
  EXPECT_GE(cells.column("freezing_ci_hi"), 0);
  EXPECT_EQ(cells.rows.size(), 2u);
}

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}
