#pragma once

#include <vector>

#include "kleekit/tolerance.hpp"
#include "kleekit/vec.hpp"

namespace kleekit {

// Ordered planar convex polygon in some plane's (u1,u2) coordinates.
// Canonical form: counter-clockwise, no three consecutive collinear vertices,
// first vertex lexicographically smallest. A single point or a segment is
// representable and flagged as degenerate rather than rejected; a section by
// a tangent plane is legitimately degenerate.
class Polygon2 {
 public:
  enum class Kind { Point, Segment, Proper };

  Polygon2() = default;

  // Canonicalizes an already-convex CCW (or degenerate) vertex cycle.
  static Polygon2 from_cycle(std::vector<Vec2> cycle, const ToleranceCfg& cfg = {});

  const std::vector<Vec2>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  Kind kind() const;
  bool degenerate() const { return kind() != Kind::Proper; }

  // Directed CCW edge (v[i], v[i+1]) as outward unit normal + offset: n·p <= c.
  struct Edge {
    Vec2 normal;
    double offset;
    Vec2 a;
    Vec2 b;
  };
  std::vector<Edge> edges() const;

  double support(const Vec2& dir) const;  // max over the region of p·dir
  // Argmax vertex of p·dir; ties broken by lowest vertex index.
  Vec2 support_point(const Vec2& dir) const;
  bool contains(const Vec2& p, double eps) const;
  double diameter() const;
  double area() const;

 private:
  std::vector<Vec2> verts_;
};

// Minimal CCW hull of a finite point set; collinear interior points are
// removed using cfg.eps_geom. Throws EmptyInput on an empty set.
Polygon2 convex_hull_2d(const std::vector<Vec2>& points, const ToleranceCfg& cfg = {});

// Euclidean distance from a point to a convex polygon (0 inside).
double distance_to_polygon(const Vec2& p, const Polygon2& poly);

// Symmetric Hausdorff distance between two proper convex polygons.
// Exact for convex regions: the sup of the (convex) distance function over a
// polygon is attained at a vertex. Throws DegeneratePolygon.
double hausdorff_polygons(const Polygon2& a, const Polygon2& b);

// Hausdorff distance between two finite point sets (vertex-set metric).
double hausdorff_point_sets(const std::vector<Vec3>& a, const std::vector<Vec3>& b);

}  // namespace kleekit
