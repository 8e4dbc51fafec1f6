#include "kleekit/duality.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include "kleekit/errors.hpp"

namespace kleekit {

Polytope3 polar_dual(const Polytope3& body, const ToleranceCfg& cfg) {
  body.validate(cfg);
  if (body.inradius() < cfg.eps_geom) {
    throw OriginNotInterior("polar_dual: origin margin below eps_geom");
  }

  Polytope3 dual;
  dual.vertices.reserve(body.facets.size());
  for (const Polytope3::Facet& f : body.facets) {
    dual.vertices.push_back(f.normal / f.offset);
  }

  const std::vector<std::vector<int>> incident = body.vertex_facets();
  dual.facets.reserve(body.vertices.size());
  for (std::size_t vi = 0; vi < body.vertices.size(); ++vi) {
    const Vec3& v = body.vertices[vi];
    const double len = v.norm();
    if (len <= cfg.eps_geom) {
      throw DegenerateInput("polar_dual: vertex at the origin");
    }
    Polytope3::Facet facet;
    facet.normal = v / len;
    facet.offset = 1.0 / len;

    // The facet cycle is the incident dual vertex set in CCW order around
    // the outward normal.
    const PlaneThroughOrigin basis = orthonormal_basis(facet.normal, cfg);
    std::vector<std::pair<double, int>> by_angle;
    Vec2 center{};
    std::vector<Vec2> flat(incident[vi].size());
    for (std::size_t k = 0; k < incident[vi].size(); ++k) {
      flat[k] = basis.to_plane(dual.vertices[static_cast<std::size_t>(incident[vi][k])]);
      center = center + flat[k];
    }
    center = center / static_cast<double>(incident[vi].size());
    for (std::size_t k = 0; k < incident[vi].size(); ++k) {
      const Vec2 d = flat[k] - center;
      by_angle.emplace_back(std::atan2(d.y, d.x), incident[vi][k]);
    }
    std::sort(by_angle.begin(), by_angle.end());
    for (const auto& [angle, di] : by_angle) {
      (void)angle;
      facet.vertex_indices.push_back(di);
    }
    dual.facets.push_back(std::move(facet));
  }

  dual.validate(cfg);
  return dual;
}

Polygon2 project_polytope(const Polytope3& body, const PlaneThroughOrigin& plane,
                          const ToleranceCfg& cfg) {
  std::vector<Vec2> shadow;
  shadow.reserve(body.vertices.size());
  for (const Vec3& v : body.vertices) shadow.push_back(plane.to_plane(v));
  return convex_hull_2d(shadow, cfg);
}

Polygon2 intersect_halfplanes(const std::vector<Halfplane>& halfplanes, const ToleranceCfg& cfg) {
  struct Line {
    Vec2 n;      // unit
    double c;    // n·p <= c
    double ang;  // angle of the boundary direction (-n.y, n.x)
  };

  std::vector<Line> lines;
  lines.reserve(halfplanes.size());
  for (const Halfplane& h : halfplanes) {
    const double len = h.normal.norm();
    if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(h.offset)) {
      throw DegenerateInput("intersect_halfplanes: invalid halfplane");
    }
    const Vec2 n = h.normal / len;
    lines.push_back({n, h.offset / len, std::atan2(n.x, -n.y)});
  }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.ang != b.ang) return a.ang < b.ang;
    return a.c < b.c;
  });

  // Among (near-)parallel halfplanes only the tightest matters.
  std::vector<Line> pruned;
  constexpr double kAngleTie = 1e-12;
  for (const Line& l : lines) {
    if (!pruned.empty() && std::abs(l.ang - pruned.back().ang) <= kAngleTie) continue;
    pruned.push_back(l);
  }
  if (pruned.size() >= 2 &&
      std::abs((pruned.front().ang + 2.0 * std::numbers::pi) - pruned.back().ang) <= kAngleTie) {
    if (pruned.back().c < pruned.front().c) pruned.front() = pruned.back();
    pruned.pop_back();
  }
  if (pruned.size() < 3) throw DegenerateInput("intersect_halfplanes: fewer than 3 directions");

  auto crossing = [](const Line& a, const Line& b) -> Vec2 {
    const double det = a.n.x * b.n.y - a.n.y * b.n.x;
    return {(a.c * b.n.y - b.c * a.n.y) / det, (a.n.x * b.c - b.n.x * a.c) / det};
  };
  auto outside = [](const Line& l, const Vec2& p) {
    return l.n.dot(p) > l.c + 1e-12 * (1.0 + p.norm());
  };

  std::deque<Line> dq;
  for (const Line& l : pruned) {
    while (dq.size() >= 2 && outside(l, crossing(dq[dq.size() - 2], dq[dq.size() - 1]))) {
      dq.pop_back();
    }
    while (dq.size() >= 2 && outside(l, crossing(dq[0], dq[1]))) dq.pop_front();
    dq.push_back(l);
  }
  while (dq.size() >= 3 && outside(dq[0], crossing(dq[dq.size() - 2], dq[dq.size() - 1]))) {
    dq.pop_back();
  }
  while (dq.size() >= 3 && outside(dq[dq.size() - 1], crossing(dq[0], dq[1]))) dq.pop_front();
  if (dq.size() < 3) throw DegenerateInput("intersect_halfplanes: intersection not full-dimensional");

  std::vector<Vec2> cycle;
  cycle.reserve(dq.size());
  for (std::size_t i = 0; i < dq.size(); ++i) {
    cycle.push_back(crossing(dq[i], dq[(i + 1) % dq.size()]));
  }
  Polygon2 poly = Polygon2::from_cycle(std::move(cycle), cfg);
  if (poly.degenerate()) {
    throw DegenerateInput("intersect_halfplanes: intersection not full-dimensional");
  }
  return poly;
}

SectionResult plane_section(const Polytope3& body, const PlaneThroughOrigin& plane,
                            const ToleranceCfg& cfg) {
  if (body.inradius() < cfg.eps_geom) {
    throw OriginNotInterior("plane_section: origin margin below eps_geom");
  }
  const double radius = body.circumradius();

  std::vector<Halfplane> halfplanes;
  halfplanes.reserve(body.facets.size());
  for (const Polytope3::Facet& f : body.facets) {
    const Vec2 a{f.normal.dot(plane.u1), f.normal.dot(plane.u2)};
    const double len = a.norm();
    // A facet nearly parallel to the plane cuts it (if at all) outside the
    // circumball; such constraints are vacuous on the section.
    if (len <= 1e-14 || f.offset > 4.0 * radius * len) continue;
    halfplanes.push_back({a, f.offset});
  }
  return SectionResult{intersect_halfplanes(halfplanes, cfg), SectionResult::Source::PolytopeExact, 0};
}

Polygon2 polar_dual_2d(const Polygon2& poly, const ToleranceCfg& cfg) {
  if (poly.degenerate()) {
    throw OriginNotInterior("polar_dual_2d: degenerate polygon has no interior");
  }
  std::vector<Vec2> cycle;
  for (const Polygon2::Edge& e : poly.edges()) {
    if (e.offset < cfg.eps_geom) {
      throw OriginNotInterior("polar_dual_2d: origin margin below eps_geom");
    }
    cycle.push_back(e.normal / e.offset);
  }
  return Polygon2::from_cycle(std::move(cycle), cfg);
}

Prop1Report verify_prop1(const Polytope3& body, const PlaneThroughOrigin& plane,
                         const ToleranceCfg& cfg) {
  const Polytope3 dual = polar_dual(body, cfg);

  Prop1Report report;
  report.lhs = plane_section(dual, plane, cfg).polygon;
  report.rhs = polar_dual_2d(project_polytope(body, plane, cfg), cfg);
  report.lhs_vertices = static_cast<int>(report.lhs.size());
  report.rhs_vertices = static_cast<int>(report.rhs.size());
  report.diameter = std::max(report.lhs.diameter(), report.rhs.diameter());
  report.hausdorff = hausdorff_polygons(report.lhs, report.rhs);
  report.tolerance = std::max(kProp1AbsTol, kProp1DiamTol * report.diameter);
  report.pass = report.hausdorff <= report.tolerance;
  return report;
}

Prop1OracleReport verify_prop1_oracle(const SupportOracle& body, const PlaneThroughOrigin& plane,
                                      int n_dirs, double tolerance) {
  if (n_dirs < 1) throw InvalidConfig("verify_prop1_oracle: n_dirs must be positive");

  Prop1OracleReport report;
  report.n_dirs = n_dirs;
  report.tolerance = tolerance;

  for (int k = 0; k < n_dirs; ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / n_dirs;
    const Vec2 w{std::cos(phi), std::sin(phi)};
    const Vec3 u = plane.from_plane(w);

    // Path (ii): the projected body's support function is the restriction of
    // h to the plane, and the 2D polar has radial function 1/h.
    const double h = body.eval(u).value;
    if (!(h > 0.0)) throw NonPositiveSupport("verify_prop1_oracle: h(u) <= 0");
    const double radial_via_projection = 1.0 / h;

    // Path (i): the dual body is {y : h(y) <= 1}; walk the ray t·u and
    // bisect for the boundary crossing of the 3D dual's section.
    double lo = 0.0, hi = 1.0;
    int guard = 0;
    while (body.eval(hi * u).value <= 1.0 && guard++ < 1100) hi *= 2.0;
    if (guard >= 1100) throw NonPositiveSupport("verify_prop1_oracle: dual ray never exits");
    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (body.eval(mid * u).value <= 1.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double radial_via_dual_section = 0.5 * (lo + hi);

    const double rel = std::abs(radial_via_dual_section - radial_via_projection) /
                       std::max(radial_via_dual_section, radial_via_projection);
    report.max_rel_discrepancy = std::max(report.max_rel_discrepancy, rel);
  }

  report.pass = report.max_rel_discrepancy < tolerance;
  return report;
}

}  // namespace kleekit
