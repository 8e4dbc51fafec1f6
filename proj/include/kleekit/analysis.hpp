#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kleekit/bodies.hpp"
#include "kleekit/polytope.hpp"
#include "kleekit/tolerance.hpp"
#include "kleekit/vec.hpp"

namespace kleekit {

// --------------------------------------------------------------------------
// Polygon detection. "Is a polygon" is undecidable from finitely many
// samples; the decidable surrogate is doubling stability: sample support
// points at M, 2M, 4M, ... uniformly spread directions, cluster them with
// radius cfg.cluster_radius, and accept once the cluster count is stable
// across two consecutive doublings with every cluster tight. The distinct
// support-point count (deduped at eps_geom) must settle over the same
// doublings; smooth curves keep minting new points even when their greedy
// cluster count saturates.
// --------------------------------------------------------------------------

struct PolygonVerdict {
  bool is_polygon = false;
  int vertex_estimate = 0;  // 0 when not a polygon
  int samples_used = 0;     // directions sampled at the deciding level
  std::vector<double> cluster_diameters;
};

PolygonVerdict detect_polygon(const PlanarSupportOracle& body, const ToleranceCfg& cfg = {},
                              int max_samples = 65536);

// Support points at one sampling level together with their greedy cluster
// ids (same direction grid and clustering rule as detect_polygon); plotting
// helper.
std::vector<std::pair<Vec2, int>> support_cluster_samples(const PlanarSupportOracle& body,
                                                          int samples, const ToleranceCfg& cfg = {});

// Exactly the vertex list of a valid polytope, post-filtered by the midpoint
// test on vertex pairs: a returned point is never the midpoint of a segment
// between two other returned points.
std::vector<Vec3> extreme_points(const Polytope3& body, const ToleranceCfg& cfg = {});

// --------------------------------------------------------------------------
// Extreme-point accumulation. Samples support points at random directions;
// a body accumulates extreme points when one ball of radius
// cfg.cluster_radius captures more than n_samples * cfg.threshold_fraction
// distinct sampled points (pairwise farther than eps_geom apart). Polytopes
// come out false (finitely many distinct points); strictly convex bodies
// come out true. Use neighborhood-scale cluster radii here, e.g.
// ToleranceCfg::accumulation_defaults().
// --------------------------------------------------------------------------

struct AccumulationVerdict {
  bool accumulating = false;
  std::optional<Vec3> witness_point;      // densest cluster center
  std::optional<Vec3> witness_direction;  // normalized mean approach direction
};

AccumulationVerdict detect_accumulation(const SupportOracle& body, int n_samples,
                                        std::uint64_t seed,
                                        const ToleranceCfg& cfg = ToleranceCfg::accumulation_defaults());

// --------------------------------------------------------------------------
// Boundary-triangle predicate: with p,q,x,y in the body, x strictly between
// p and q, and the segment [xy] on the boundary, the whole triangle pqy must
// lie on the boundary. Precondition failures throw PreconditionViolated so
// "not applicable" is never confused with "conclusion false"; a plain false
// return means the conclusion itself failed on a sampled grid point.
// --------------------------------------------------------------------------

bool lemma1_check(const Polytope3& body, const Vec3& p, const Vec3& q, const Vec3& x,
                  const Vec3& y, const ToleranceCfg& cfg = {});

// --------------------------------------------------------------------------
// Empty-cone-neighborhood check at p toward q: epsilon is the largest
// (clamped to pi/4) radius/angle for which no extreme point r other than p
// satisfies both 0 < |p-r| < epsilon and angle(r,p,q) < epsilon. holds
// reports the verifying rescan over the finite extreme-point set.
// --------------------------------------------------------------------------

struct Prop2Result {
  double epsilon = 0.0;
  bool holds = false;
};

Prop2Result prop2_region_check(const Polytope3& body, const Vec3& p, const Vec3& q,
                               const ToleranceCfg& cfg = {});

// --------------------------------------------------------------------------
// Closedness probe for a planar set given by a membership oracle: a sequence
// lying fully inside the set whose (author-supplied) limit falls outside is
// a witness that the set is not closed. Convergence of each sequence is
// sanity-checked via consecutive-difference decay.
// --------------------------------------------------------------------------

struct PointSequence {
  std::vector<Vec2> points;
  Vec2 limit;
};

struct ClosednessWitness {
  int sequence_index = 0;
  Vec2 limit;
};

struct ClosednessReport {
  int sequences_checked = 0;
  std::vector<ClosednessWitness> witnesses;
  bool not_closed() const { return !witnesses.empty(); }
};

ClosednessReport closedness_check(const std::function<bool(const Vec2&)>& membership,
                                  const std::vector<PointSequence>& sequences,
                                  const ToleranceCfg& cfg = {});

}  // namespace kleekit
