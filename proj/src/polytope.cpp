#include "kleekit/polytope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "kleekit/errors.hpp"
#include "kleekit/polygon.hpp"

namespace kleekit {

bool Polytope3::contains(const Vec3& p, const ToleranceCfg& cfg) const {
  const double eps = cfg.scaled_eps(p.norm());
  for (const Facet& f : facets) {
    if (f.normal.dot(p) > f.offset + eps) return false;
  }
  return true;
}

double Polytope3::min_facet_plane_distance(const Vec3& p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const Facet& f : facets) best = std::min(best, std::abs(f.normal.dot(p) - f.offset));
  return best;
}

bool Polytope3::on_boundary(const Vec3& p, const ToleranceCfg& cfg) const {
  return contains(p, cfg) && min_facet_plane_distance(p) <= cfg.scaled_eps(p.norm());
}

double Polytope3::circumradius() const {
  double r = 0.0;
  for (const Vec3& v : vertices) r = std::max(r, v.norm());
  return r;
}

double Polytope3::inradius() const {
  double r = std::numeric_limits<double>::infinity();
  for (const Facet& f : facets) r = std::min(r, f.offset);
  return r;
}

double Polytope3::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      d = std::max(d, distance(vertices[i], vertices[j]));
    }
  }
  return d;
}

Vec3 Polytope3::centroid() const {
  Vec3 c{};
  for (const Vec3& v : vertices) c = c + v;
  return c / static_cast<double>(vertices.size());
}

std::vector<std::vector<int>> Polytope3::vertex_facets() const {
  std::vector<std::vector<int>> incident(vertices.size());
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    for (int vi : facets[fi].vertex_indices) incident[static_cast<std::size_t>(vi)].push_back(static_cast<int>(fi));
  }
  return incident;
}

namespace {

double point_line_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 d = b - a;
  const double len = d.norm();
  if (len == 0.0) return distance(p, a);
  return (p - a).cross(d).norm() / len;
}

}  // namespace

void Polytope3::validate(const ToleranceCfg& cfg) const {
  if (vertices.size() < 4) throw DegenerateInput("polytope has fewer than 4 vertices");
  if (facets.size() < 4) throw DegenerateInput("polytope has fewer than 4 facets");

  for (const Vec3& v : vertices) {
    if (!v.finite()) throw DegenerateInput("polytope vertex has non-finite components");
  }

  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    const Facet& f = facets[fi];
    if (std::abs(f.normal.norm() - 1.0) > cfg.eps_rel) {
      throw DegenerateInput("facet normal is not unit length");
    }
    if (f.vertex_indices.size() < 3) {
      throw DegenerateInput("facet has fewer than 3 vertices");
    }
    for (int vi : f.vertex_indices) {
      if (vi < 0 || static_cast<std::size_t>(vi) >= vertices.size()) {
        throw DegenerateInput("facet references an invalid vertex index");
      }
      const Vec3& v = vertices[static_cast<std::size_t>(vi)];
      if (std::abs(f.normal.dot(v) - f.offset) > cfg.scaled_eps(v.norm())) {
        throw DegenerateInput("incident vertex is off its facet plane");
      }
    }
  }

  std::vector<int> facets_per_vertex(vertices.size(), 0);
  for (const Facet& f : facets) {
    for (int vi : f.vertex_indices) facets_per_vertex[static_cast<std::size_t>(vi)]++;
  }
  for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
    if (facets_per_vertex[vi] < 3) {
      throw DegenerateInput("vertex " + std::to_string(vi) + " lies on fewer than 3 facets");
    }
    const Vec3& v = vertices[vi];
    for (const Facet& f : facets) {
      if (f.normal.dot(v) > f.offset + cfg.scaled_eps(v.norm())) {
        throw DegenerateInput("vertex " + std::to_string(vi) + " violates a facet halfspace");
      }
    }
  }

  // Full-dimensional span: greedily pick four vertices spanning a fat tetra.
  const Vec3& p0 = *std::min_element(vertices.begin(), vertices.end(),
                                     [](const Vec3& a, const Vec3& b) { return lex_less(a, b); });
  const double scale = 1.0 + circumradius();
  auto far_from = [&](auto&& dist_fn) {
    double best = -1.0;
    Vec3 pick{};
    for (const Vec3& v : vertices) {
      const double d = dist_fn(v);
      if (d > best) {
        best = d;
        pick = v;
      }
    }
    return std::make_pair(pick, best);
  };
  auto [p1, d1] = far_from([&](const Vec3& v) { return distance(v, p0); });
  if (d1 <= cfg.eps_geom * scale) throw DegenerateInput("vertex set collapses to a point");
  auto [p2, d2] = far_from([&](const Vec3& v) { return point_line_distance(v, p0, p1); });
  if (d2 <= cfg.eps_geom * scale) throw DegenerateInput("vertex set is collinear");
  const Vec3 n = (p1 - p0).cross(p2 - p0).normalized();
  auto [p3, d3] = far_from([&](const Vec3& v) { return std::abs(n.dot(v - p0)); });
  (void)p3;
  if (d3 <= cfg.eps_geom * scale) throw DegenerateInput("vertex set is coplanar");
}

// ---------------------------------------------------------------------------
// convex_hull_3d
// ---------------------------------------------------------------------------

namespace {

struct TriFace {
  int a, b, c;
  Vec3 n;
  double d;
  bool alive = true;
};

TriFace make_face(const std::vector<Vec3>& pts, int a, int b, int c) {
  const Vec3 cr = (pts[static_cast<std::size_t>(b)] - pts[static_cast<std::size_t>(a)])
                      .cross(pts[static_cast<std::size_t>(c)] - pts[static_cast<std::size_t>(a)]);
  const double len = cr.norm();
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw DegenerateInput("convex_hull_3d: degenerate face encountered");
  }
  TriFace f{a, b, c, cr / len, 0.0, true};
  f.d = f.n.dot(pts[static_cast<std::size_t>(a)]);
  return f;
}

std::vector<Vec3> dedupe_points(const std::vector<Vec3>& points, double eps) {
  std::vector<Vec3> out;
  for (const Vec3& p : points) {
    bool dup = false;
    for (const Vec3& q : out) {
      if (distance(p, q) <= eps) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  return out;
}

using EdgeKey = std::pair<int, int>;
EdgeKey edge_key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// Union-find over triangle indices, for the coplanar-merge pass.
struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); }
};

}  // namespace

Polytope3 convex_hull_3d(const std::vector<Vec3>& points, const ToleranceCfg& cfg) {
  if (points.empty()) throw EmptyInput("convex_hull_3d: no points");
  for (const Vec3& p : points) {
    if (!p.finite()) throw DegenerateInput("convex_hull_3d: non-finite point");
  }
  if (points.size() < 4) throw DegenerateInput("convex_hull_3d: need at least 4 points");

  std::vector<Vec3> pts = dedupe_points(points, cfg.eps_geom);
  const std::size_t n = pts.size();
  if (n < 4) throw DegenerateInput("convex_hull_3d: fewer than 4 distinct points");

  double scale = 0.0;
  for (const Vec3& p : pts) scale = std::max(scale, p.norm());
  const double eps = cfg.eps_geom * (1.0 + scale);

  // Extreme initial tetrahedron, deterministic tie-breaks by scan order.
  auto argmax = [&](auto&& score) {
    int best = -1;
    double best_val = eps;
    for (std::size_t i = 0; i < n; ++i) {
      const double s = score(pts[i]);
      if (s > best_val) {
        best_val = s;
        best = static_cast<int>(i);
      }
    }
    return best;
  };

  int i0 = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (lex_less(pts[i], pts[static_cast<std::size_t>(i0)])) i0 = static_cast<int>(i);
  }
  const Vec3 p0 = pts[static_cast<std::size_t>(i0)];
  const int i1 = argmax([&](const Vec3& v) { return distance(v, p0); });
  if (i1 < 0) throw DegenerateInput("convex_hull_3d: all points coincide");
  const Vec3 p1 = pts[static_cast<std::size_t>(i1)];
  const int i2 = argmax([&](const Vec3& v) { return point_line_distance(v, p0, p1); });
  if (i2 < 0) throw DegenerateInput("convex_hull_3d: points are collinear");
  const Vec3 p2 = pts[static_cast<std::size_t>(i2)];
  const Vec3 tri_n = (p1 - p0).cross(p2 - p0).normalized();
  const int i3 = argmax([&](const Vec3& v) { return std::abs(tri_n.dot(v - p0)); });
  if (i3 < 0) throw DegenerateInput("convex_hull_3d: points are coplanar");

  std::vector<TriFace> faces;
  const Vec3 inner = (p0 + p1 + p2 + pts[static_cast<std::size_t>(i3)]) / 4.0;
  auto add_face = [&](int a, int b, int c) {
    TriFace f = make_face(pts, a, b, c);
    if (f.n.dot(inner) > f.d) f = make_face(pts, a, c, b);
    faces.push_back(f);
  };
  add_face(i0, i1, i2);
  add_face(i0, i1, i3);
  add_face(i0, i2, i3);
  add_face(i1, i2, i3);

  std::vector<bool> done(n, false);
  done[static_cast<std::size_t>(i0)] = done[static_cast<std::size_t>(i1)] = true;
  done[static_cast<std::size_t>(i2)] = done[static_cast<std::size_t>(i3)] = true;

  auto build_edge_map = [&]() {
    std::map<EdgeKey, std::vector<int>> edges;
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
      if (!faces[fi].alive) continue;
      const TriFace& f = faces[fi];
      edges[edge_key(f.a, f.b)].push_back(static_cast<int>(fi));
      edges[edge_key(f.b, f.c)].push_back(static_cast<int>(fi));
      edges[edge_key(f.c, f.a)].push_back(static_cast<int>(fi));
    }
    return edges;
  };

  // Furthest-point-first insertion; points never poking out beyond eps are
  // final (the hull only grows).
  for (;;) {
    int best_pt = -1, best_face = -1;
    double best_dist = eps;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      double far = -std::numeric_limits<double>::infinity();
      int far_face = -1;
      for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        if (!faces[fi].alive) continue;
        const double d = faces[fi].n.dot(pts[i]) - faces[fi].d;
        if (d > far) {
          far = d;
          far_face = static_cast<int>(fi);
        }
      }
      if (far <= eps) {
        done[i] = true;  // inside or on the current hull, stays that way
        continue;
      }
      if (far > best_dist) {
        best_dist = far;
        best_pt = static_cast<int>(i);
        best_face = far_face;
      }
    }
    if (best_pt < 0) break;

    const Vec3& apex = pts[static_cast<std::size_t>(best_pt)];
    auto edges = build_edge_map();

    // Connected visible region around the most-violated face.
    std::vector<bool> visible(faces.size(), false);
    std::vector<int> stack{best_face};
    visible[static_cast<std::size_t>(best_face)] = true;
    while (!stack.empty()) {
      const int fi = stack.back();
      stack.pop_back();
      const TriFace& f = faces[static_cast<std::size_t>(fi)];
      const std::array<EdgeKey, 3> ks{edge_key(f.a, f.b), edge_key(f.b, f.c), edge_key(f.c, f.a)};
      for (const EdgeKey& k : ks) {
        for (int g : edges[k]) {
          if (g == fi || visible[static_cast<std::size_t>(g)]) continue;
          const TriFace& gf = faces[static_cast<std::size_t>(g)];
          if (gf.n.dot(apex) - gf.d > eps) {
            visible[static_cast<std::size_t>(g)] = true;
            stack.push_back(g);
          }
        }
      }
    }

    // Horizon: directed edges of visible faces whose neighbor stays.
    std::vector<std::pair<int, int>> horizon;
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
      if (!faces[fi].alive || !visible[fi]) continue;
      const TriFace& f = faces[fi];
      const std::array<std::pair<int, int>, 3> dir_edges{
          std::make_pair(f.a, f.b), std::make_pair(f.b, f.c), std::make_pair(f.c, f.a)};
      for (const auto& [u, v] : dir_edges) {
        bool neighbor_visible = false;
        for (int g : edges[edge_key(u, v)]) {
          if (g != static_cast<int>(fi) && visible[static_cast<std::size_t>(g)]) {
            neighbor_visible = true;
          }
        }
        if (!neighbor_visible) horizon.emplace_back(u, v);
      }
    }

    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
      if (visible[fi]) faces[fi].alive = false;
    }
    for (const auto& [u, v] : horizon) {
      faces.push_back(make_face(pts, u, v, best_pt));
    }
    done[static_cast<std::size_t>(best_pt)] = true;
  }

  // Merge adjacent near-coplanar triangles into polygonal facets.
  std::vector<int> alive_idx;
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    if (faces[fi].alive) alive_idx.push_back(static_cast<int>(fi));
  }
  DisjointSet groups(alive_idx.size());
  std::map<int, int> to_local;
  for (std::size_t k = 0; k < alive_idx.size(); ++k) to_local[alive_idx[k]] = static_cast<int>(k);

  {
    auto edges = build_edge_map();
    for (const auto& [key, fs] : edges) {
      (void)key;
      for (std::size_t a = 0; a < fs.size(); ++a) {
        for (std::size_t b = a + 1; b < fs.size(); ++b) {
          const TriFace& fa = faces[static_cast<std::size_t>(fs[a])];
          const TriFace& fb = faces[static_cast<std::size_t>(fs[b])];
          if (fa.n.dot(fb.n) > 0.0 && fa.n.cross(fb.n).norm() < cfg.eps_geom) {
            groups.unite(to_local[fs[a]], to_local[fs[b]]);
          }
        }
      }
    }
  }

  std::map<int, std::vector<int>> members;  // group root -> alive face ids
  for (std::size_t k = 0; k < alive_idx.size(); ++k) {
    members[groups.find(static_cast<int>(k))].push_back(alive_idx[k]);
  }

  Polytope3 out;
  std::vector<int> global_to_out(n, -1);
  auto out_index = [&](int gi) {
    if (global_to_out[static_cast<std::size_t>(gi)] < 0) {
      global_to_out[static_cast<std::size_t>(gi)] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(pts[static_cast<std::size_t>(gi)]);
    }
    return global_to_out[static_cast<std::size_t>(gi)];
  };

  for (const auto& [root, group] : members) {
    (void)root;
    // Area-weighted group normal.
    Vec3 nsum{};
    for (int fi : group) {
      const TriFace& f = faces[static_cast<std::size_t>(fi)];
      const Vec3 cr = (pts[static_cast<std::size_t>(f.b)] - pts[static_cast<std::size_t>(f.a)])
                          .cross(pts[static_cast<std::size_t>(f.c)] - pts[static_cast<std::size_t>(f.a)]);
      nsum = nsum + cr;
    }
    const Vec3 normal = nsum.normalized();

    std::vector<int> member_verts;
    for (int fi : group) {
      const TriFace& f = faces[static_cast<std::size_t>(fi)];
      for (int vi : {f.a, f.b, f.c}) {
        if (std::find(member_verts.begin(), member_verts.end(), vi) == member_verts.end()) {
          member_verts.push_back(vi);
        }
      }
    }

    double offset = 0.0;
    for (int vi : member_verts) offset += normal.dot(pts[static_cast<std::size_t>(vi)]);
    offset /= static_cast<double>(member_verts.size());

    // The facet cycle is the 2D hull of the member vertices in the facet
    // plane; triangulation-interior and mid-edge points drop out here.
    const PlaneThroughOrigin basis = orthonormal_basis(normal, cfg);
    std::vector<Vec2> flat;
    flat.reserve(member_verts.size());
    for (int vi : member_verts) flat.push_back(basis.to_plane(pts[static_cast<std::size_t>(vi)]));
    const Polygon2 cycle = convex_hull_2d(flat, cfg);
    if (cycle.degenerate()) throw DegenerateInput("convex_hull_3d: merged facet is degenerate");

    Polytope3::Facet facet;
    facet.normal = normal;
    facet.offset = offset;
    for (const Vec2& q : cycle.vertices()) {
      int pick = -1;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < flat.size(); ++k) {
        const double d = distance(flat[k], q);
        if (d < best) {
          best = d;
          pick = member_verts[k];
        }
      }
      facet.vertex_indices.push_back(out_index(pick));
    }
    out.facets.push_back(std::move(facet));
  }

  out.validate(cfg);
  return out;
}

}  // namespace kleekit
