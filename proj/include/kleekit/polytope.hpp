#pragma once

#include <vector>

#include "kleekit/plane.hpp"
#include "kleekit/tolerance.hpp"
#include "kleekit/vec.hpp"

namespace kleekit {

// Bounded 3D polytope carrying both representations at once:
// vertices (V-rep) and facet halfspaces n·x <= c (H-rep), plus the
// facet-vertex incidence as an outward-CCW vertex cycle per facet.
struct Polytope3 {
  struct Facet {
    Vec3 normal;               // unit outward
    double offset;             // n·x <= offset
    std::vector<int> vertex_indices;  // CCW cycle viewed from outside
  };

  std::vector<Vec3> vertices;
  std::vector<Facet> facets;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t facet_count() const { return facets.size(); }

  bool contains(const Vec3& p, const ToleranceCfg& cfg = {}) const;
  // Inside all halfspaces and within tolerance of at least one facet plane.
  bool on_boundary(const Vec3& p, const ToleranceCfg& cfg = {}) const;
  // Distance to the nearest facet plane (unsigned); large when deep inside.
  double min_facet_plane_distance(const Vec3& p) const;

  double circumradius() const;  // max |v|
  double inradius() const;      // min facet offset; origin-centered in-ball
  double diameter() const;
  Vec3 centroid() const;

  // Transposed incidence: facets meeting at each vertex.
  std::vector<std::vector<int>> vertex_facets() const;

  // Throws DegenerateInput with a description if any structural invariant
  // fails: unit normals, halfspace membership of every vertex, >= 3 facets
  // per vertex, >= 3 on-plane vertices per facet, full-dimensional span.
  void validate(const ToleranceCfg& cfg = {}) const;
};

// Hull of >= 4 non-coplanar points. Quickhull-style incremental construction
// over triangles, then adjacent near-coplanar triangles are merged into
// polygonal facets (normal deviation < cfg.eps_geom radians) so a cube comes
// out with 6 quads, not 12 triangles. Interior points and points interior to
// facets or edges do not survive as vertices.
Polytope3 convex_hull_3d(const std::vector<Vec3>& points, const ToleranceCfg& cfg = {});

}  // namespace kleekit
