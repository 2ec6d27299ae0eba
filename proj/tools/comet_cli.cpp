#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "comet/benchmark.hpp"
#include "comet/plot.hpp"
#include "comet/scenario_io.hpp"
#include "comet/simulation.hpp"

namespace fs = std::filesystem;
using namespace comet;

namespace {

struct Globals {
  std::optional<std::uint64_t> seed;
  std::vector<std::string> params;
  std::optional<int> threads;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Scenario load_with_overrides(const std::string& file, const Globals& g) {
  Scenario s = load_scenario(file);
  s.params = apply_param_overrides(s.params, g.params);
  const auto problems = validate_scenario(s);
  if (!problems.empty()) throw std::runtime_error("invalid scenario: " + problems.front());
  return s;
}

int cmd_score(const std::string& file, int frames, const Globals& g) {
  const Scenario s = load_with_overrides(file, g);
  WorldState state = initial_state(s);
  Planner perception(s, PlannerKind::Comet, g.seed.value_or(0));
  for (int f = 0; f <= frames; ++f) {
    perception.perceive(state, f);
    if (f < frames) state = step_world(s, std::move(state), {}, s.dt);
  }
  const auto peds = perception.observations(state);
  const auto groups = partition_groups(perception.tracks(), grouping_options(s.params));

  std::cout << config_comment_block(json{{"params", s.params}, {"sensor", s.sensor}});
  std::cout << "frame,group_id,members,proximity,walking_speed,size,interaction,gender,total,"
               "level\n";
  for (const auto& grp : groups) {
    const auto members = group_members(grp, peds);
    const auto b = score_group(members, peds, s.params);
    std::cout << frames << ',' << grp.id << ',';
    for (std::size_t i = 0; i < grp.members.size(); ++i) {
      std::cout << (i ? " " : "") << grp.members[i];
    }
    std::cout << ',' << fmt(b.proximity) << ',' << fmt(b.walking_speed) << ',' << fmt(b.size)
              << ',' << fmt(b.interaction) << ',' << fmt(b.gender) << ',' << fmt(b.total) << ','
              << to_string(b.level) << '\n';
  }
  return 0;
}

int cmd_run(const std::string& file, const std::string& planner_name, const fs::path& out_dir,
            const Globals& g) {
  const Scenario s = load_with_overrides(file, g);
  const auto planner = planner_from_string(planner_name);
  if (!planner) throw std::runtime_error("unknown planner " + planner_name);
  const std::uint64_t seed = g.seed.value_or(0);
  const TrialResult r = run_trial(s, *planner, seed);

  fs::create_directories(out_dir);
  json scenario_json = s;
  json trial{{"planner", to_string(r.planner)},
             {"seed", r.seed},
             {"steps", r.steps.size()},
             {"reached_goal", r.reached_goal},
             {"froze", r.froze},
             {"freeze_flags", r.freeze_flags},
             {"collisions", r.collisions},
             {"avg_deviation_deg", r.avg_deviation_deg},
             {"path_length", r.path_length},
             {"normalized_path_length", r.normalized_path_length
                                            ? json(*r.normalized_path_length)
                                            : json(nullptr)},
             {"scenario", scenario_json}};
  write_file(out_dir / "trial.json", trial.dump(2) + "\n");

  std::ostringstream csv;
  csv << config_comment_block(json{{"planner", to_string(r.planner)},
                                   {"seed", r.seed},
                                   {"params", s.params},
                                   {"sensor", s.sensor}});
  csv << "t,x,y,vx,vy,phi,frozen\n";
  for (const auto& st : r.steps) {
    csv << fmt(st.t) << ',' << fmt(st.position.x) << ',' << fmt(st.position.y) << ','
        << fmt(st.velocity.x) << ',' << fmt(st.velocity.y) << ',' << fmt(st.deviation) << ','
        << (st.frozen ? 1 : 0) << '\n';
  }
  write_file(out_dir / "trajectory.csv", csv.str());
  std::cout << "reached_goal=" << r.reached_goal << " froze=" << r.froze
            << " avg_deviation_deg=" << fmt(r.avg_deviation_deg) << '\n';
  return 0;
}

int cmd_bench(const std::string& file, const fs::path& out_dir, const Globals& g) {
  BenchmarkConfig cfg = load_benchmark_config(file);
  if (g.seed) cfg.base_seed = *g.seed;
  if (g.threads) cfg.threads = *g.threads;
  cfg.base.params = apply_param_overrides(cfg.base.params, g.params);
  const BatchReport report = run_benchmark(cfg);
  fs::create_directories(out_dir);
  write_file(out_dir / "report.csv", report_table_csv(report));
  write_file(out_dir / "cells.csv", report_cells_csv(report));
  std::cout << report_table_csv(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crowd navigation simulator with group cohesion scoring"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--params", g.params, "Parameter override KEY=VAL (repeatable)");
  app.add_option("--threads", g.threads, "Worker threads for bench")->check(CLI::PositiveNumber);

  std::string scenario_file;
  int frames = 10;
  auto* score = app.add_subcommand("score", "Per-group cohesion report for one frame");
  score->add_option("--scenario", scenario_file)->required()->check(CLI::ExistingFile);
  score->add_option("--frame", frames, "Frames to observe before scoring")
      ->check(CLI::NonNegativeNumber);

  std::string planner = "comet";
  std::string out_dir;
  auto* run = app.add_subcommand("run", "Closed-loop trial");
  run->add_option("--scenario", scenario_file)->required()->check(CLI::ExistingFile);
  run->add_option("--planner", planner)->check(CLI::IsMember({"dwa", "frozone", "comet"}));
  run->add_option("--out", out_dir)->required();

  std::string config_file;
  auto* bench = app.add_subcommand("bench", "Corridor benchmark");
  bench->add_option("--config", config_file)->required()->check(CLI::ExistingFile);
  bench->add_option("--out", out_dir)->required();

  std::string in_dir;
  auto* plot = app.add_subcommand("plot", "Render SVG figures from run or bench output");
  plot->add_option("--in", in_dir)->required()->check(CLI::ExistingDirectory);
  plot->add_option("--out", out_dir, "Output SVG file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*score) return cmd_score(scenario_file, frames, g);
    if (*run) return cmd_run(scenario_file, planner, out_dir, g);
    if (*bench) return cmd_bench(config_file, out_dir, g);
    if (*plot) {
      plot_directory(in_dir, out_dir);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
