#include "comet/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace comet {

Hull convex_hull(std::span<const Vec2> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: no points");

  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(),
            [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return Hull{pts};

  std::vector<Vec2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return Hull{std::move(h)};
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squared_norm();
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

double distance_to_hull(const Hull& h, Vec2 p) {
  const auto& v = h.vertices;
  if (v.empty()) return std::numeric_limits<double>::infinity();
  if (v.size() == 1) return distance(p, v[0]);
  if (v.size() == 2) return point_segment_distance(p, v[0], v[1]);

  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2 a = v[i];
    const Vec2 b = v[(i + 1) % v.size()];
    if (cross(b - a, p - a) < 0.0) inside = false;
    best = std::min(best, point_segment_distance(p, a, b));
  }
  return inside ? 0.0 : best;
}

bool contains(const Hull& h, Vec2 p, double eps) { return distance_to_hull(h, p) <= eps; }

bool in_region_p(Vec2 p, const Hull& pfz_min, std::span<const Hull> others, double eps) {
  if (!contains(pfz_min, p, eps)) return false;
  return std::none_of(others.begin(), others.end(),
                      [&](const Hull& h) { return contains(h, p, eps); });
}

Hull translate(const Hull& h, Vec2 offset) {
  Hull out = h;
  for (auto& v : out.vertices) v += offset;
  return out;
}

double area(const Hull& h) {
  if (!h.is_polygon()) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    twice += cross(h.vertices[i], h.vertices[(i + 1) % h.vertices.size()]);
  }
  return twice / 2.0;
}

}  // namespace comet
