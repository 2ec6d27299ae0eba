#include "comet/grouping.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace comet {

GroupingOptions grouping_options(const ParamSet& p) {
  return {p.group_distance, p.grouping_rule, p.static_speed};
}

bool pair_compatible(Vec2 p_i, Vec2 v_i, Vec2 p_j, Vec2 v_j, const GroupingOptions& opt) {
  const Vec2 dp = p_i - p_j;
  if (dp.norm() > opt.max_distance) return false;

  const double si = v_i.norm();
  const double sj = v_j.norm();
  const bool static_i = si < opt.static_speed;
  const bool static_j = sj < opt.static_speed;
  if (static_i && static_j) return true;

  if (opt.rule == GroupingRule::DotSign) {
    if (static_i || static_j) return false;
    return dot(v_i, v_j) / (si * sj) > 0.0;
  }
  const Vec2 later = dp + (v_i - v_j);
  return dp.norm() >= later.norm();
}

std::vector<std::pair<std::size_t, std::size_t>> compatibility_graph(
    std::span<const Track> tracks, const GroupingOptions& opt) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    for (std::size_t j = i + 1; j < tracks.size(); ++j) {
      if (pair_compatible(tracks[i].position(), tracks[i].velocity(), tracks[j].position(),
                          tracks[j].velocity(), opt)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return edges;
}

namespace {

struct DisjointSet {
  std::vector<std::size_t> parent;

  explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<Group> partition_groups(std::span<const Track> tracks, const GroupingOptions& opt) {
  DisjointSet components(tracks.size());
  for (const auto& [i, j] : compatibility_graph(tracks, opt)) components.unite(i, j);

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < tracks.size(); ++i) by_root[components.find(i)].push_back(i);

  std::vector<Group> groups;
  groups.reserve(by_root.size());
  for (const auto& [root, indices] : by_root) {
    Group g;
    Vec2 vsum;
    for (std::size_t i : indices) {
      g.members.push_back(tracks[i].id);
      vsum += tracks[i].velocity();
    }
    std::sort(g.members.begin(), g.members.end());
    g.id = g.members.front();
    g.avg_velocity = vsum / static_cast<double>(indices.size());
    groups.push_back(std::move(g));
  }
  std::sort(groups.begin(), groups.end(),
            [](const Group& a, const Group& b) { return a.id < b.id; });
  return groups;
}

}  // namespace comet
