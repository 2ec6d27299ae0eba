#include "comet/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace comet {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(CorridorConfig, length, halfwidth, spawn_start,
                                                min_speed, max_speed, min_group, max_group,
                                                member_spacing, oncoming_fraction)

Scenario make_corridor_scenario(int pedestrians, std::uint64_t seed, const CorridorConfig& c,
                                const Scenario& base) {
  Scenario s = base;
  s.agents.clear();
  s.groups_truth.clear();
  s.robot_start = {0.0, 0.0};
  s.robot_goal = {c.length, 0.0};
  s.robot_heading = 0.0;
  s.corridor_halfwidth = c.halfwidth;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  const double lane = c.halfwidth - 0.3;
  int next_id = 1;
  while (next_id <= pedestrians) {
    const int remaining = pedestrians - next_id + 1;
    const int wanted = std::uniform_int_distribution<int>(c.min_group, c.max_group)(rng);
    const int size = std::min(wanted, remaining);

    const Vec2 center{uniform(c.spawn_start, c.length), uniform(-lane, lane)};
    const bool oncoming = unit(rng) < c.oncoming_fraction;
    const Vec2 dir{oncoming ? -1.0 : 1.0, 0.0};
    const double speed = uniform(c.min_speed, c.max_speed);
    const double goal_x = oncoming ? -10.0 : c.length + 10.0;

    std::vector<Vec2> spots{center};
    while (static_cast<int>(spots.size()) < size) {
      const double r = uniform(0.5, 1.0) * c.member_spacing;
      const double a = uniform(-std::numbers::pi, std::numbers::pi);
      Vec2 q = center + Vec2{r * std::cos(a), r * std::sin(a)};
      q.y = std::clamp(q.y, -lane, lane);
      spots.push_back(q);
    }
    Vec2 mid;
    for (const auto& q : spots) mid += q;
    mid = mid / static_cast<double>(spots.size());

    GroupAnnotation truth;
    for (const auto& q : spots) {
      AgentState a;
      a.id = next_id++;
      a.position = q;
      a.velocity = dir * speed;
      a.goal = {goal_x, q.y};
      a.gender = unit(rng) < 0.5 ? Gender::A : Gender::B;
      Vec2 look = dir;
      if (size > 1 && unit(rng) < s.params.face_toward_probability && distance(mid, q) > 1e-6) {
        look = (mid - q) / distance(mid, q);
      }
      a.face = FacePose{{q.x, q.y, 1.6}, {look.x, look.y, 0.0}};
      truth.members.push_back(a.id);
      s.agents.push_back(a);
    }
    s.groups_truth.push_back(std::move(truth));
  }
  return s;
}

void to_json(json& j, const BenchmarkConfig& c) {
  std::vector<std::string> planners;
  for (auto p : c.planners) planners.push_back(to_string(p));
  j = json{{"counts", c.counts},
           {"trials", c.trials},
           {"planners", planners},
           {"base_seed", c.base_seed},
           {"threads", c.threads},
           {"bootstrap_resamples", c.bootstrap_resamples},
           {"corridor", c.corridor},
           {"dt", c.base.dt},
           {"max_steps", c.base.max_steps},
           {"goal_tolerance", c.base.goal_tolerance},
           {"params", c.base.params},
           {"sensor", c.base.sensor}};
}

void from_json(const json& j, BenchmarkConfig& c) {
  c = BenchmarkConfig{};
  c.counts = j.value("counts", c.counts);
  c.trials = j.value("trials", c.trials);
  if (auto it = j.find("planners"); it != j.end()) {
    c.planners.clear();
    for (const auto& name : *it) {
      const auto kind = planner_from_string(name.get<std::string>());
      if (!kind) throw std::runtime_error("unknown planner " + name.dump());
      c.planners.push_back(*kind);
    }
  }
  c.base_seed = j.value("base_seed", c.base_seed);
  c.threads = j.value("threads", c.threads);
  c.bootstrap_resamples = j.value("bootstrap_resamples", c.bootstrap_resamples);
  c.corridor = j.value("corridor", c.corridor);
  c.base.dt = j.value("dt", c.base.dt);
  c.base.max_steps = j.value("max_steps", c.base.max_steps);
  c.base.goal_tolerance = j.value("goal_tolerance", c.base.goal_tolerance);
  if (auto it = j.find("params"); it != j.end()) c.base.params = it->get<ParamSet>();
  if (auto it = j.find("sensor"); it != j.end()) c.base.sensor = it->get<SensorConfig>();
  if (c.trials <= 0) throw std::runtime_error("trials must be positive");
  if (c.counts.empty()) throw std::runtime_error("counts must not be empty");
}

BenchmarkConfig load_benchmark_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open benchmark config " + path.string());
  return json::parse(in).get<BenchmarkConfig>();
}

std::uint64_t trial_seed(std::uint64_t base, int count, int index) {
  // splitmix64 over the packed key
  std::uint64_t z = base * 0x9E3779B97F4A7C15ULL + (static_cast<std::uint64_t>(count) << 32) +
                    static_cast<std::uint64_t>(index);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

const CellStats& BatchReport::cell(PlannerKind planner, int count) const {
  for (const auto& c : cells) {
    if (c.planner == planner && c.count == count) return c;
  }
  throw std::out_of_range("no cell for " + to_string(planner) + " at " + std::to_string(count));
}

CellStats aggregate(PlannerKind planner, int count, std::span<const TrialResult> trials,
                    int resamples, std::uint64_t seed) {
  CellStats c;
  c.planner = planner;
  c.count = count;
  c.trials = static_cast<int>(trials.size());
  std::vector<bool> frozen;
  double dev = 0.0;
  double npl = 0.0;
  double collisions = 0.0;
  for (const auto& t : trials) {
    frozen.push_back(t.froze);
    c.frozen += t.froze ? 1 : 0;
    dev += t.avg_deviation_deg;
    collisions += t.collisions;
    if (t.normalized_path_length) {
      ++c.reached;
      npl += *t.normalized_path_length;
    }
  }
  if (c.trials > 0) {
    c.mean_avg_deviation_deg = dev / c.trials;
    c.freezing_rate = metric_freezing_rate(trials);
    c.mean_collisions = collisions / c.trials;
  }
  c.mean_normalized_path_length = c.reached > 0 ? npl / c.reached : 0.0;
  c.freezing_ci = bootstrap_rate_interval(frozen, resamples, seed);
  return c;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

BatchReport run_benchmark(const BenchmarkConfig& config, std::vector<TrialResult>* all_trials) {
  struct Job {
    int count;
    int index;
    std::size_t planner;
  };
  std::vector<Job> jobs;
  for (int count : config.counts) {
    for (int i = 0; i < config.trials; ++i) {
      for (std::size_t p = 0; p < config.planners.size(); ++p) jobs.push_back({count, i, p});
    }
  }

  std::vector<TrialResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const auto& job = jobs[k];
      const auto seed = trial_seed(config.base_seed, job.count, job.index);
      const Scenario s = make_corridor_scenario(job.count, seed, config.corridor, config.base);
      results[k] = run_trial(s, config.planners[job.planner], seed);
    }
  };
  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  BatchReport report;
  report.resolved_config = config;
  report.resolved_config.erase("threads");
  report.config_hash = fnv1a_hex(report.resolved_config.dump());
  for (std::size_t p = 0; p < config.planners.size(); ++p) {
    for (int count : config.counts) {
      std::vector<TrialResult> cell;
      for (std::size_t k = 0; k < jobs.size(); ++k) {
        if (jobs[k].planner == p && jobs[k].count == count) cell.push_back(results[k]);
      }
      report.cells.push_back(aggregate(config.planners[p], count, cell,
                                       config.bootstrap_resamples,
                                       trial_seed(config.base_seed, count, 1000000 + static_cast<int>(p))));
    }
  }
  if (all_trials) *all_trials = std::move(results);
  return report;
}

std::string config_comment_block(const json& config) {
  std::ostringstream out;
  std::istringstream lines(config.dump(2));
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  return out.str();
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string method_label(PlannerKind k) {
  switch (k) {
    case PlannerKind::Dwa: return "DWA";
    case PlannerKind::Frozone: return "DWA+Frozone";
    case PlannerKind::Comet: return "DWA+CoMet";
  }
  return "?";
}

std::vector<int> counts_of(const BatchReport& r) {
  std::vector<int> counts;
  for (const auto& c : r.cells) {
    if (std::find(counts.begin(), counts.end(), c.count) == counts.end()) counts.push_back(c.count);
  }
  return counts;
}

std::vector<PlannerKind> planners_of(const BatchReport& r) {
  std::vector<PlannerKind> planners;
  for (const auto& c : r.cells) {
    if (std::find(planners.begin(), planners.end(), c.planner) == planners.end()) {
      planners.push_back(c.planner);
    }
  }
  return planners;
}

}  // namespace

std::string report_table_csv(const BatchReport& report) {
  std::ostringstream out;
  out << "# config_hash: " << report.config_hash << '\n';
  out << config_comment_block(report.resolved_config);
  const auto counts = counts_of(report);
  out << "metric,method";
  for (int c : counts) out << ',' << c << " peds";
  out << '\n';

  struct Metric {
    const char* name;
    double CellStats::*field;
  };
  const Metric metrics[] = {{"avg_deviation_deg", &CellStats::mean_avg_deviation_deg},
                            {"freezing_rate", &CellStats::freezing_rate},
                            {"normalized_path_length", &CellStats::mean_normalized_path_length}};
  for (const auto& m : metrics) {
    for (auto planner : planners_of(report)) {
      out << m.name << ',' << method_label(planner);
      for (int c : counts) out << ',' << fmt(report.cell(planner, c).*m.field);
      out << '\n';
    }
  }
  return out.str();
}

std::string report_cells_csv(const BatchReport& report) {
  std::ostringstream out;
  out << "# config_hash: " << report.config_hash << '\n';
  out << config_comment_block(report.resolved_config);
  out << "planner,count,trials,reached,frozen,avg_deviation_deg,freezing_rate,freezing_ci_lo,"
         "freezing_ci_hi,normalized_path_length,collisions\n";
  for (const auto& c : report.cells) {
    out << to_string(c.planner) << ',' << c.count << ',' << c.trials << ',' << c.reached << ','
        << c.frozen << ',' << fmt(c.mean_avg_deviation_deg) << ',' << fmt(c.freezing_rate) << ','
        << fmt(c.freezing_ci.lo) << ',' << fmt(c.freezing_ci.hi) << ','
        << fmt(c.mean_normalized_path_length) << ',' << fmt(c.mean_collisions) << '\n';
  }
  return out.str();
}

}  // namespace comet
