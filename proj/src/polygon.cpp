#include "kleekit/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kleekit/errors.hpp"

namespace kleekit {

namespace {

// Collinearity is judged scale-free: |cross| <= eps * |ab| * |bc|.
bool strict_left_turn(const Vec2& a, const Vec2& b, const Vec2& c, double eps) {
  const Vec2 ab = b - a;
  const Vec2 bc = c - b;
  return ab.cross(bc) > eps * ab.norm() * bc.norm();
}

std::vector<Vec2> dedupe(std::vector<Vec2> pts, double eps) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) { return lex_less(a, b); });
  std::vector<Vec2> out;
  for (const Vec2& p : pts) {
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      if (it->x < p.x - eps) break;
      if (distance(*it, p) <= eps) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  return out;
}

void rotate_to_lex_start(std::vector<Vec2>& cycle) {
  if (cycle.size() < 2) return;
  auto start = std::min_element(cycle.begin(), cycle.end(),
                                [](const Vec2& a, const Vec2& b) { return lex_less(a, b); });
  std::rotate(cycle.begin(), start, cycle.end());
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.norm2();
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

}  // namespace

Polygon2 Polygon2::from_cycle(std::vector<Vec2> cycle, const ToleranceCfg& cfg) {
  if (cycle.empty()) throw EmptyInput("polygon cycle is empty");
  for (const Vec2& v : cycle) {
    if (!v.finite()) throw DegenerateInput("polygon vertex has non-finite components");
  }

  // Drop consecutive near-duplicates (cyclically).
  std::vector<Vec2> clean;
  for (const Vec2& v : cycle) {
    if (clean.empty() || distance(clean.back(), v) > cfg.eps_geom) clean.push_back(v);
  }
  while (clean.size() > 1 && distance(clean.front(), clean.back()) <= cfg.eps_geom) {
    clean.pop_back();
  }

  // Drop collinear middle vertices (cyclically) until stable.
  bool changed = true;
  while (changed && clean.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < clean.size() && clean.size() >= 3; ++i) {
      const Vec2& a = clean[(i + clean.size() - 1) % clean.size()];
      const Vec2& b = clean[i];
      const Vec2& c = clean[(i + 1) % clean.size()];
      if (!strict_left_turn(a, b, c, cfg.eps_geom)) {
        const Vec2 ab = b - a, bc = c - b;
        if (ab.cross(bc) < -cfg.eps_geom * ab.norm() * bc.norm()) {
          throw DegenerateInput("polygon cycle is not counter-clockwise convex");
        }
        clean.erase(clean.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (clean.size() == 2 || clean.empty()) {
    // A fully collinear cycle reduces to its extreme pair.
    std::vector<Vec2> pts = dedupe(cycle, cfg.eps_geom);
    if (pts.size() > 2) {
      auto far = std::max_element(pts.begin() + 1, pts.end(), [&](const Vec2& a, const Vec2& b) {
        return distance(pts.front(), a) < distance(pts.front(), b);
      });
      clean = {pts.front(), *far};
    } else {
      clean = pts;
    }
  }

  rotate_to_lex_start(clean);
  Polygon2 poly;
  poly.verts_ = std::move(clean);
  return poly;
}

Polygon2::Kind Polygon2::kind() const {
  if (verts_.size() >= 3) return Kind::Proper;
  if (verts_.size() == 2) return Kind::Segment;
  return Kind::Point;
}

std::vector<Polygon2::Edge> Polygon2::edges() const {
  std::vector<Edge> out;
  const std::size_t n = verts_.size();
  if (n < 2) return out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = verts_[i];
    const Vec2& b = verts_[(i + 1) % n];
    if (n == 2 && i == 1) break;  // a segment has one geometric edge
    const Vec2 d = b - a;
    const Vec2 normal = Vec2{d.y, -d.x} / d.norm();  // outward for CCW
    out.push_back(Edge{normal, normal.dot(a), a, b});
  }
  return out;
}

double Polygon2::support(const Vec2& dir) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& v : verts_) best = std::max(best, v.dot(dir));
  return best;
}

Vec2 Polygon2::support_point(const Vec2& dir) const {
  std::size_t best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const double val = verts_[i].dot(dir);
    if (val > best_val) {
      best_val = val;
      best = i;
    }
  }
  return verts_[best];
}

bool Polygon2::contains(const Vec2& p, double eps) const {
  if (verts_.empty()) return false;
  if (verts_.size() == 1) return distance(p, verts_[0]) <= eps;
  if (verts_.size() == 2) return point_segment_distance(p, verts_[0], verts_[1]) <= eps;
  for (const Edge& e : edges()) {
    if (e.normal.dot(p) > e.offset + eps) return false;
  }
  return true;
}

double Polygon2::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    for (std::size_t j = i + 1; j < verts_.size(); ++j) {
      best = std::max(best, distance(verts_[i], verts_[j]));
    }
  }
  return best;
}

double Polygon2::area() const {
  double twice = 0.0;
  const std::size_t n = verts_.size();
  for (std::size_t i = 0; i < n; ++i) twice += verts_[i].cross(verts_[(i + 1) % n]);
  return 0.5 * twice;
}

Polygon2 convex_hull_2d(const std::vector<Vec2>& points, const ToleranceCfg& cfg) {
  if (points.empty()) throw EmptyInput("convex_hull_2d: no points");
  for (const Vec2& p : points) {
    if (!p.finite()) throw DegenerateInput("convex_hull_2d: non-finite point");
  }

  std::vector<Vec2> pts = dedupe(points, cfg.eps_geom);
  if (pts.size() <= 2) {
    Polygon2 poly = Polygon2::from_cycle(pts, cfg);
    return poly;
  }

  // Andrew's monotone chain, strict turns only.
  auto build = [&](bool lower) {
    std::vector<Vec2> chain;
    auto scan = [&](const Vec2& p) {
      while (chain.size() >= 2 &&
             !strict_left_turn(chain[chain.size() - 2], chain.back(), p, cfg.eps_geom)) {
        chain.pop_back();
      }
      chain.push_back(p);
    };
    if (lower) {
      for (const Vec2& p : pts) scan(p);
    } else {
      for (auto it = pts.rbegin(); it != pts.rend(); ++it) scan(*it);
    }
    return chain;
  };

  std::vector<Vec2> lower = build(true);
  std::vector<Vec2> upper = build(false);
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return Polygon2::from_cycle(std::move(lower), cfg);
}

double distance_to_polygon(const Vec2& p, const Polygon2& poly) {
  const auto& verts = poly.vertices();
  if (verts.empty()) throw DegeneratePolygon("distance to empty polygon");
  if (verts.size() == 1) return distance(p, verts[0]);
  if (poly.contains(p, 0.0)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, point_segment_distance(p, verts[i], verts[(i + 1) % n]));
  }
  return best;
}

double hausdorff_polygons(const Polygon2& a, const Polygon2& b) {
  if (a.degenerate() || b.degenerate()) {
    throw DegeneratePolygon("hausdorff_polygons requires proper polygons");
  }
  double h = 0.0;
  for (const Vec2& v : a.vertices()) h = std::max(h, distance_to_polygon(v, b));
  for (const Vec2& w : b.vertices()) h = std::max(h, distance_to_polygon(w, a));
  return h;
}

double hausdorff_point_sets(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  if (a.empty() || b.empty()) throw EmptyInput("hausdorff_point_sets: empty set");
  auto one_sided = [](const std::vector<Vec3>& from, const std::vector<Vec3>& to) {
    double worst = 0.0;
    for (const Vec3& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Vec3& q : to) best = std::min(best, distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

}  // namespace kleekit
