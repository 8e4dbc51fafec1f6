#pragma once

#include <memory>
#include <vector>

#include "kleekit/plane.hpp"
#include "kleekit/polygon.hpp"
#include "kleekit/polytope.hpp"
#include "kleekit/tolerance.hpp"
#include "kleekit/vec.hpp"

namespace kleekit {

// --------------------------------------------------------------------------
// Support oracles: a convex body presented as h(u) = max_{x in K} x·u plus
// one maximizing boundary point per direction. Oracles are pure and
// reentrant; h is positively homogeneous and subadditive by construction.
// --------------------------------------------------------------------------

struct Support {
  double value;
  Vec3 point;
};

class SupportOracle {
 public:
  virtual ~SupportOracle() = default;
  virtual Support eval(const Vec3& direction) const = 0;
};

struct Support2 {
  double value;
  Vec2 point;
};

class PlanarSupportOracle {
 public:
  virtual ~PlanarSupportOracle() = default;
  virtual Support2 eval(const Vec2& direction) const = 0;
};

// h(u) = sqrt(a²ux² + b²uy² + c²uz²), s(u) = (a²ux, b²uy, c²uz)/h(u).
std::shared_ptr<SupportOracle> ellipsoid_oracle(double a, double b, double c);

// h(u) = max over vertices of v·u; argmax ties break to the lowest index so
// detectors built on top stay deterministic.
std::shared_ptr<SupportOracle> polytope_oracle(const Polytope3& poly);

// 2D body obtained by orthogonally projecting an oracle body into a plane:
// the support function restricts, the support point projects.
std::shared_ptr<PlanarSupportOracle> projected_oracle(std::shared_ptr<const SupportOracle> body,
                                                      const PlaneThroughOrigin& plane);

// Planar oracle over an explicit convex polygon (argmax over vertices,
// lowest index on ties).
std::shared_ptr<PlanarSupportOracle> polygon_oracle(const Polygon2& poly);

// --------------------------------------------------------------------------
// The body zoo
// --------------------------------------------------------------------------

Polytope3 make_cube(double half_width, const ToleranceCfg& cfg = {});
Polytope3 make_simplex(const ToleranceCfg& cfg = {});        // regular tetrahedron
Polytope3 make_octahedron(double scale = 1.0, const ToleranceCfg& cfg = {});
Polytope3 make_dodecahedron(const ToleranceCfg& cfg = {});   // regular, 20 vertices / 12 facets

// Hull of n uniform points on the unit sphere, redrawn (bounded retries)
// until the origin is strictly interior with margin >= cfg.eps_geom.
// Deterministic per seed. Throws GenerationFailed when the budget runs out.
Polytope3 random_polytope(int n_points, std::uint64_t seed, const ToleranceCfg& cfg = {});

// --------------------------------------------------------------------------
// The Mirkil cone: the one deliberately unbounded inhabitant, kept outside
// the generic body framework (polar duality needs bounded bodies). Concrete
// parameterization: C = { t·(1, a, b) : t >= 0, a² + (b - 1/2)² <= 1/4 },
// rays from the origin through a disk tangent to the z = 0 plane at (1,0,0).
// --------------------------------------------------------------------------

// Membership in the horizontal projection of C into the (y,z)-plane:
// true iff b > 0, or (a,b) = (0,0) exactly.
bool mirkil_membership(double a, double b);

struct MirkilProjection {
  bool contains(const Vec2& p) const { return mirkil_membership(p.x, p.y); }
};

// Sample points of C itself (every returned point is a member). Boundary
// rays of the disk, including the tangent ray along the x-axis, are sampled
// with positive probability.
std::vector<Vec3> mirkil_cone_sample(int n_rays, std::uint64_t seed);

}  // namespace kleekit
