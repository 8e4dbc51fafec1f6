#include "kleekit/bodies.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "kleekit/errors.hpp"
#include "kleekit/rng.hpp"

namespace kleekit {

namespace {

constexpr double kDirectionFloor = 1e-300;

class EllipsoidOracle final : public SupportOracle {
 public:
  EllipsoidOracle(double a, double b, double c) : a_(a), b_(b), c_(c) {}

  Support eval(const Vec3& u) const override {
    if (!u.finite() || u.norm() <= kDirectionFloor) throw ZeroDirection();
    const double h = std::sqrt(a_ * a_ * u.x * u.x + b_ * b_ * u.y * u.y + c_ * c_ * u.z * u.z);
    const Vec3 s{a_ * a_ * u.x / h, b_ * b_ * u.y / h, c_ * c_ * u.z / h};
    return {h, s};
  }

 private:
  double a_, b_, c_;
};

class PolytopeOracle final : public SupportOracle {
 public:
  explicit PolytopeOracle(Polytope3 poly) : poly_(std::move(poly)) {}

  Support eval(const Vec3& u) const override {
    if (!u.finite() || u.norm() <= kDirectionFloor) throw ZeroDirection();
    std::size_t best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly_.vertices.size(); ++i) {
      const double val = poly_.vertices[i].dot(u);
      if (val > best_val) {
        best_val = val;
        best = i;
      }
    }
    return {best_val, poly_.vertices[best]};
  }

 private:
  Polytope3 poly_;
};

class ProjectedOracle final : public PlanarSupportOracle {
 public:
  ProjectedOracle(std::shared_ptr<const SupportOracle> body, const PlaneThroughOrigin& plane)
      : body_(std::move(body)), plane_(plane) {}

  Support2 eval(const Vec2& w) const override {
    const Support s = body_->eval(plane_.from_plane(w));
    return {s.value, plane_.to_plane(s.point)};
  }

 private:
  std::shared_ptr<const SupportOracle> body_;
  PlaneThroughOrigin plane_;
};

class PolygonOracle final : public PlanarSupportOracle {
 public:
  explicit PolygonOracle(Polygon2 poly) : poly_(std::move(poly)) {}

  Support2 eval(const Vec2& w) const override {
    if (!w.finite() || w.norm() <= kDirectionFloor) throw ZeroDirection();
    return {poly_.support(w), poly_.support_point(w)};
  }

 private:
  Polygon2 poly_;
};

}  // namespace

std::shared_ptr<SupportOracle> ellipsoid_oracle(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) throw NonPositiveAxis();
  return std::make_shared<EllipsoidOracle>(a, b, c);
}

std::shared_ptr<SupportOracle> polytope_oracle(const Polytope3& poly) {
  if (poly.vertices.empty()) throw EmptyInput("polytope_oracle: no vertices");
  return std::make_shared<PolytopeOracle>(poly);
}

std::shared_ptr<PlanarSupportOracle> projected_oracle(std::shared_ptr<const SupportOracle> body,
                                                      const PlaneThroughOrigin& plane) {
  return std::make_shared<ProjectedOracle>(std::move(body), plane);
}

std::shared_ptr<PlanarSupportOracle> polygon_oracle(const Polygon2& poly) {
  if (poly.vertices().empty()) throw EmptyInput("polygon_oracle: empty polygon");
  return std::make_shared<PolygonOracle>(poly);
}

Polytope3 make_cube(double half_width, const ToleranceCfg& cfg) {
  if (!(half_width > 0.0)) throw NonPositiveSize("cube half-width must be positive");
  const double w = half_width;
  std::vector<Vec3> corners;
  corners.reserve(8);
  for (double sx : {-w, w}) {
    for (double sy : {-w, w}) {
      for (double sz : {-w, w}) corners.push_back({sx, sy, sz});
    }
  }
  return convex_hull_3d(corners, cfg);
}

Polytope3 make_simplex(const ToleranceCfg& cfg) {
  // Regular tetrahedron with centroid at the origin.
  return convex_hull_3d({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}, cfg);
}

Polytope3 make_octahedron(double scale, const ToleranceCfg& cfg) {
  if (!(scale > 0.0)) throw NonPositiveSize("octahedron scale must be positive");
  const double s = scale;
  return convex_hull_3d({{s, 0, 0}, {-s, 0, 0}, {0, s, 0}, {0, -s, 0}, {0, 0, s}, {0, 0, -s}}, cfg);
}

Polytope3 make_dodecahedron(const ToleranceCfg& cfg) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double inv = 1.0 / phi;
  std::vector<Vec3> pts;
  for (double sx : {-1.0, 1.0}) {
    for (double sy : {-1.0, 1.0}) {
      for (double sz : {-1.0, 1.0}) pts.push_back({sx, sy, sz});
    }
  }
  for (double a : {-inv, inv}) {
    for (double b : {-phi, phi}) {
      pts.push_back({0.0, a, b});
      pts.push_back({a, b, 0.0});
      pts.push_back({b, 0.0, a});
    }
  }
  return convex_hull_3d(pts, cfg);
}

Polytope3 random_polytope(int n_points, std::uint64_t seed, const ToleranceCfg& cfg) {
  if (n_points < 8) throw NonPositiveSize("random_polytope requires n_points >= 8");
  constexpr int kMaxAttempts = 256;
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) pts.push_back(rng.unit_vector());
    Polytope3 hull;
    try {
      hull = convex_hull_3d(pts, cfg);
    } catch (const DegenerateInput&) {
      continue;  // astronomically unlikely coplanar draw; redraw
    }
    if (hull.inradius() >= cfg.eps_geom) return hull;
  }
  throw GenerationFailed("random_polytope: origin-interior condition not met within retry budget");
}

bool mirkil_membership(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return b > 0.0 || (a == 0.0 && b == 0.0);
}

std::vector<Vec3> mirkil_cone_sample(int n_rays, std::uint64_t seed) {
  if (n_rays < 1) throw NonPositiveSize("mirkil_cone_sample requires n_rays >= 1");
  Rng rng(seed);
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(n_rays));
  for (int i = 0; i < n_rays; ++i) {
    // Disk of radius 1/2 centered at (a,b) = (0, 1/2); one draw in ten sits
    // exactly on the boundary circle so the tangent ray along the x-axis
    // (through disk point (0,0)) gets exercised.
    const bool on_circle = (rng.next_u64() % 10) == 0;
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double r = on_circle ? 0.5 : 0.5 * std::sqrt(rng.uniform01());
    double a = r * std::cos(theta);
    double b = 0.5 + r * std::sin(theta);
    if (b <= 0.0 || (on_circle && (rng.next_u64() % 4) == 0)) {
      // b = 0 on the disk forces (0,0) in exact arithmetic; snap rounding
      // stragglers onto the tangency point rather than leave them outside.
      a = 0.0;
      b = 0.0;
    }
    // t = 0 hits the apex; sampled with positive probability as well.
    const double t = (rng.next_u64() % 16) == 0 ? 0.0 : rng.uniform(0.0, 4.0);
    out.push_back({t, t * a, t * b});
  }
  return out;
}

}  // namespace kleekit
