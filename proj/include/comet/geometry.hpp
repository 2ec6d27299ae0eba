#pragma once

#include <span>
#include <vector>

#include "comet/world.hpp"

namespace comet {

/// Convex hull as counterclockwise vertices: one vertex is a point hull, two
/// a segment, three or more a strictly convex polygon.
struct Hull {
  std::vector<Vec2> vertices;

  bool is_point() const { return vertices.size() == 1; }
  bool is_segment() const { return vertices.size() == 2; }
  bool is_polygon() const { return vertices.size() >= 3; }
  bool operator==(const Hull&) const = default;
};

inline constexpr double kGeometryEps = 1e-9;

/// Andrew's monotone chain. Collinear and duplicate points are dropped, so
/// collinear input yields its two extreme points. Throws on empty input.
Hull convex_hull(std::span<const Vec2> points);

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

/// Zero inside (or on) the hull, Euclidean distance to it otherwise.
double distance_to_hull(const Hull& h, Vec2 p);

/// p lies inside the hull or within eps of it.
bool contains(const Hull& h, Vec2 p, double eps = kGeometryEps);

/// Membership in pfz_min minus every hull in `others`, each taken with the
/// same eps tolerance.
bool in_region_p(Vec2 p, const Hull& pfz_min, std::span<const Hull> others,
                 double eps = kGeometryEps);

Hull translate(const Hull& h, Vec2 offset);

/// Area of a polygon hull; zero for points and segments.
double area(const Hull& h);

}  // namespace comet
