#pragma once

#include <span>
#include <utility>
#include <vector>

#include "comet/tracking.hpp"
#include "comet/world.hpp"

namespace comet {

struct Group {
  int id = 0;                // smallest member id
  std::vector<int> members;  // track ids, ascending
  Vec2 avg_velocity;

  std::size_t size() const { return members.size(); }
};

struct GroupingOptions {
  double max_distance = 2.0;
  GroupingRule rule = GroupingRule::NonDivergence;
  double static_speed = 0.05;
};

GroupingOptions grouping_options(const ParamSet& p);

/// Two pedestrians may share a group when they are within max_distance and
/// are not diverging: their separation after one second of motion is no
/// larger than now (or, under DotSign, their headings agree). Pairs of static
/// pedestrians are judged on distance alone.
bool pair_compatible(Vec2 p_i, Vec2 v_i, Vec2 p_j, Vec2 v_j, const GroupingOptions& opt);

/// Edges (indices into `tracks`, i < j) of the pairwise compatibility graph.
std::vector<std::pair<std::size_t, std::size_t>> compatibility_graph(
    std::span<const Track> tracks, const GroupingOptions& opt);

/// Connected components of the compatibility graph. Components of two or
/// more become groups; every other track becomes a singleton group. The
/// result covers every track exactly once, ordered by group id.
std::vector<Group> partition_groups(std::span<const Track> tracks, const GroupingOptions& opt);

}  // namespace comet
