#pragma once

// Independent reference implementations used to check the library.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <vector>

#include "comet/dwa.hpp"
#include "comet/world.hpp"

namespace oracle {

using comet::Vec2;

// O(n^3) hull: an ordered pair (a, b) is a hull edge when every other point
// is strictly left of a->b or lies on the closed segment. Returns the sorted
// set of edge endpoints.
inline std::vector<Vec2> brute_force_hull_vertices(std::vector<Vec2> pts) {
  auto less = [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;

  std::vector<Vec2> out;
  auto add = [&](Vec2 p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      const Vec2 a = pts[i], b = pts[j];
      bool edge = true;
      for (std::size_t k = 0; k < pts.size() && edge; ++k) {
        if (k == i || k == j) continue;
        const Vec2 p = pts[k];
        const double c = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        if (c < 0.0) {
          edge = false;
        } else if (c == 0.0) {
          const double t = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
          const double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
          if (t < 0.0 || t > len2) edge = false;
        }
      }
      if (edge) {
        add(a);
        add(b);
      }
    }
  }
  std::sort(out.begin(), out.end(), less);
  return out;
}

// Crossing-number point-in-polygon over an arbitrary vertex list.
inline bool point_in_polygon(const std::vector<Vec2>& poly, Vec2 p) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Vec2 a = poly[i], b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

inline double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = comet::dot(ab, ab);
  double t = len2 > 0.0 ? comet::dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return comet::distance(p, a + ab * t);
}

inline double boundary_distance(const std::vector<Vec2>& poly, Vec2 p) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    d = std::min(d, segment_distance(p, poly[j], poly[i]));
  }
  return d;
}

// Exhaustive angle grid at `step`, same objective and tie rules as the
// library search.
inline std::optional<double> grid_search(Vec2 origin, Vec2 velocity, Vec2 goal, double horizon,
                                         double step,
                                         const std::function<bool(Vec2)>& feasible) {
  std::optional<double> best;
  double best_d = std::numeric_limits<double>::infinity();
  const long n = std::lround(std::numbers::pi / step);
  for (long k = -n; k <= n; ++k) {
    const double a = k * step;
    const Vec2 c = origin + comet::rotate(velocity, a) * horizon;
    if (!feasible(c)) continue;
    const double d = comet::distance(c, goal);
    const bool better = d < best_d - 1e-12 ||
                        (std::abs(d - best_d) <= 1e-12 &&
                         (std::abs(a) < std::abs(*best) - 1e-12 ||
                          (std::abs(std::abs(a) - std::abs(*best)) <= 1e-12 && a > *best)));
    if (better) {
      best_d = d;
      best = a;
    }
  }
  return best;
}

// Score of one (v, omega) sample, written from the documented definition:
// unicycle arc with moving discs, heading error at the end of the rollout
// unless the arc passed the target, clearance capped, speed normalised by
// v_max.
inline std::optional<double> dwa_score(Vec2 pos, double heading, double v_max, double radius,
                                       double v, double omega, Vec2 target,
                                       const std::vector<Vec2>& obstacles,
                                       const std::vector<Vec2>& velocities, double obstacle_radius,
                                       const comet::DwaConfig& cfg) {
  const double contact = radius + obstacle_radius;
  const int n = static_cast<int>(std::lround(cfg.horizon / cfg.rollout_dt));
  double clearance = std::numeric_limits<double>::infinity();
  bool arrived = comet::distance(pos, target) <= cfg.arrival_radius;
  for (int k = 1; k <= n; ++k) {
    const double t = k * cfg.rollout_dt;
    Vec2 p;
    double th;
    if (std::abs(omega) < 1e-9) {
      p = pos + Vec2{std::cos(heading), std::sin(heading)} * (v * t);
      th = heading;
    } else {
      th = heading + omega * t;
      p = pos + Vec2{v / omega * (std::sin(th) - std::sin(heading)),
                     -v / omega * (std::cos(th) - std::cos(heading))};
    }
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
      const Vec2 o = velocities.empty() ? obstacles[i] : obstacles[i] + velocities[i] * t;
      const double gap = comet::distance(p, o) - contact;
      const double gap0 = comet::distance(pos, obstacles[i]) - contact;
      if (gap < 0.0 && gap < gap0 - 1e-9) return std::nullopt;
      clearance = std::min(clearance, gap);
    }
    arrived = arrived || comet::distance(p, target) <= cfg.arrival_radius;
    if (k == n) {
      const Vec2 d = target - p;
      const double err = std::abs(comet::wrap_angle(std::atan2(d.y, d.x) - th));
      const double h = !arrived && d.norm() > 1e-6 ? 1.0 - err / std::numbers::pi : 1.0;
      const double c = std::clamp(clearance, 0.0, cfg.clearance_cap) / cfg.clearance_cap;
      return cfg.heading_weight * h + cfg.clearance_weight * c + cfg.speed_weight * v / v_max;
    }
  }
  return std::nullopt;
}

// Connected components from the transitive closure of the edge relation
// (Floyd-Warshall), independent of the union-find in the library. O(n^3).
inline std::vector<std::vector<int>> brute_force_components(
    int n, const std::function<bool(int, int)>& edge) {
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (int j = 0; j < n; ++j) {
      if (i != j && edge(i, j)) reach[i][j] = true;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    std::vector<int> comp;
    for (int j = 0; j < n; ++j) {
      if (reach[i][j]) {
        label[j] = static_cast<int>(out.size());
        comp.push_back(j);
      }
    }
    out.push_back(comp);
  }
  return out;
}

}  // namespace oracle
