#pragma once

#include <vector>

#include "kleekit/bodies.hpp"
#include "kleekit/plane.hpp"
#include "kleekit/polygon.hpp"
#include "kleekit/polytope.hpp"
#include "kleekit/tolerance.hpp"

namespace kleekit {

// Pass/fail thresholds pinned once for the whole harness.
inline constexpr double kProp1AbsTol = 1e-9;        // absolute Hausdorff floor
inline constexpr double kProp1DiamTol = 1e-7;       // Hausdorff <= max(abs, diam * this)
inline constexpr double kProp1OracleRelTol = 1e-10; // radial-function agreement

// Polar dual of a polytope with the origin strictly interior (margin
// cfg.eps_geom). Representations swap: facet (n,c) -> vertex n/c, vertex v ->
// facet (v/|v|, 1/|v|); the incidence transposes combinatorially, so the
// round trip (K*)* reproduces K to floating-point accuracy.
Polytope3 polar_dual(const Polytope3& body, const ToleranceCfg& cfg = {});

// Shadow of the polytope on the plane, in (u1,u2) coordinates: the 2D hull
// of the projected vertices. Degenerate output is flagged, not an error.
Polygon2 project_polytope(const Polytope3& body, const PlaneThroughOrigin& plane,
                          const ToleranceCfg& cfg = {});

struct SectionResult {
  enum class Source { PolytopeExact, OracleSampled };
  Polygon2 polygon;
  Source source = Source::PolytopeExact;
  int sample_count = 0;  // 0 for exact sections
};

// Exact section body ∩ P in plane coordinates: each facet halfspace meets P
// in a halfplane; the polygon is their common intersection. Requires the
// origin interior (which makes the section full-dimensional in P).
SectionResult plane_section(const Polytope3& body, const PlaneThroughOrigin& plane,
                            const ToleranceCfg& cfg = {});

// A halfplane n·p <= c in plane coordinates; n need not be unit.
struct Halfplane {
  Vec2 normal;
  double offset;
};

// Intersection of halfplanes whose common region is bounded with the origin
// strictly interior: sort by boundary direction angle, then incremental
// deque intersection. A lower-dimensional or empty outcome throws
// DegenerateInput, since callers guarantee full dimension.
Polygon2 intersect_halfplanes(const std::vector<Halfplane>& halfplanes,
                              const ToleranceCfg& cfg = {});

// 2D polar within the plane: edge (n,c) -> vertex n/c, vertex -> edge.
// Requires the plane origin strictly interior to the polygon.
Polygon2 polar_dual_2d(const Polygon2& poly, const ToleranceCfg& cfg = {});

// One verification case for the section/projection duality identity:
// LHS = plane_section(polar_dual(K), P), RHS = polar_dual_2d(project_polytope(K, P)).
// The two sides go through disjoint code paths on purpose.
struct Prop1Report {
  int lhs_vertices = 0;
  int rhs_vertices = 0;
  double hausdorff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double diameter = 0.0;  // scale the tolerance was derived from
  Polygon2 lhs;
  Polygon2 rhs;
};

Prop1Report verify_prop1(const Polytope3& body, const PlaneThroughOrigin& plane,
                         const ToleranceCfg& cfg = {});

// Radial-function form of the same identity for oracle bodies: for unit
// u in P the radial function of (dual body) ∩ P must equal 1/h(u). Computed
// two ways: (i) bisection on the dual membership predicate h(t·u) <= 1,
// (ii) reciprocal of the projected support function. Smooth duals have no
// finite vertex description, so polygons are never materialized here.
struct Prop1OracleReport {
  int n_dirs = 0;
  double max_rel_discrepancy = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

Prop1OracleReport verify_prop1_oracle(const SupportOracle& body, const PlaneThroughOrigin& plane,
                                      int n_dirs, double tolerance = kProp1OracleRelTol);

}  // namespace kleekit
