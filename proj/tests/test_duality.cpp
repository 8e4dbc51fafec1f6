#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "kleekit/bodies.hpp"
#include "kleekit/duality.hpp"
#include "kleekit/errors.hpp"
#include "kleekit/polygon.hpp"
#include "kleekit/rng.hpp"

using namespace kleekit;

namespace {

bool near_any(const Vec3& p, const std::vector<Vec3>& set, double eps) {
  for (const Vec3& q : set) {
    if (distance(p, q) <= eps) return true;
  }
  return false;
}

// Random point of the body as a convex combination of its vertices.
Vec3 random_inner_point(const Polytope3& poly, Rng& rng) {
  double total = 0.0;
  Vec3 p{};
  for (const Vec3& v : poly.vertices) {
    const double w = rng.uniform01() + 1e-9;
    p = p + v * w;
    total += w;
  }
  return p / total;
}

}  // namespace

TEST_CASE("polar_dual: cube <-> octahedron") {
  const Polytope3 cube = make_cube(1.0);
  const Polytope3 dual = polar_dual(cube);
  CHECK(dual.vertex_count() == 6);
  CHECK(dual.facet_count() == 8);
  const std::vector<Vec3> expected = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                      {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  for (const Vec3& e : expected) CHECK(near_any(e, dual.vertices, 1e-12));

  const Polytope3 back = polar_dual(dual);
  CHECK(back.vertex_count() == 8);
  CHECK(back.facet_count() == 6);
  for (const Vec3& v : cube.vertices) CHECK(near_any(v, back.vertices, 1e-12));
}

TEST_CASE("polar_dual: dodecahedron <-> icosahedron counts") {
  const Polytope3 dodeca = make_dodecahedron();
  const Polytope3 icosa = polar_dual(dodeca);
  CHECK(icosa.vertex_count() == 12);
  CHECK(icosa.facet_count() == 20);
  for (const auto& f : icosa.facets) CHECK(f.vertex_indices.size() == 3);
}

TEST_CASE("polar_dual: definitional check x.y <= 1 on random bodies") {
  const Polytope3 body = random_polytope(30, 7);
  const Polytope3 dual = polar_dual(body);
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 x = random_inner_point(body, rng);
    for (const Vec3& y : dual.vertices) CHECK(x.dot(y) <= 1.0 + 1e-9);
  }
}

TEST_CASE("polar_dual: requires the origin strictly inside") {
  std::vector<Vec3> shifted;
  for (const Vec3& v : make_cube(1.0).vertices) shifted.push_back(v + Vec3{3, 0, 0});
  const Polytope3 off_center = convex_hull_3d(shifted);
  CHECK_THROWS_AS(polar_dual(off_center), OriginNotInterior);
}

TEST_CASE("polar_dual: involution across random bodies") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 8 + static_cast<int>((seed * 9) % 43);
    const Polytope3 body = random_polytope(n, seed);
    const Polytope3 twice = polar_dual(polar_dual(body));
    REQUIRE(twice.vertex_count() == body.vertex_count());
    std::vector<Vec3> a = body.vertices, b = twice.vertices;
    CHECK(hausdorff_point_sets(a, b) <= 1e-9);
    // Count swap both ways
    const Polytope3 dual = polar_dual(body);
    CHECK(dual.vertex_count() == body.facet_count());
    CHECK(dual.facet_count() == body.vertex_count());
  }
}

TEST_CASE("polar_dual: inclusion reversal on nested bodies") {
  const Polytope3 body = random_polytope(24, 13);
  std::vector<Vec3> scaled;
  for (const Vec3& v : body.vertices) scaled.push_back(v * 1.5);
  const Polytope3 bigger = convex_hull_3d(scaled);  // body ⊆ bigger
  const Polytope3 dual_small = polar_dual(body);
  const Polytope3 dual_big = polar_dual(bigger);
  for (const Vec3& y : dual_big.vertices) CHECK(dual_small.contains(y));
}

TEST_CASE("project_polytope: cube shadows") {
  const Polytope3 cube = make_cube(1.0);
  const Polygon2 sq = project_polytope(cube, orthonormal_basis({0, 0, 1}));
  REQUIRE(sq.size() == 4);
  CHECK(sq.area() == doctest::Approx(4.0));

  // Along the main diagonal the shadow is a regular hexagon with circumradius
  // sqrt(8/3): corner minus its diagonal component.
  const double s = 1.0 / std::sqrt(3.0);
  const Polygon2 hex = project_polytope(cube, orthonormal_basis({s, s, s}));
  REQUIRE(hex.size() == 6);
  for (const Vec2& v : hex.vertices()) {
    CHECK(v.norm() == doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-12));
  }
}

TEST_CASE("project_polytope: face-parallel tetrahedron projects to a triangle") {
  const Polytope3 tet = convex_hull_3d({{0, 0, 1}, {1, 0, -1}, {-1, 1, -1}, {-1, -1, -1}});
  const Polygon2 shadow = project_polytope(tet, orthonormal_basis({0, 0, 1}));
  CHECK(shadow.size() == 3);
}

TEST_CASE("plane_section: octahedron equator is the unit diamond") {
  const Polytope3 octa = make_octahedron();
  const SectionResult sr = plane_section(octa, orthonormal_basis({0, 0, 1}));
  CHECK(sr.source == SectionResult::Source::PolytopeExact);
  CHECK(sr.sample_count == 0);
  REQUIRE(sr.polygon.size() == 4);
  for (const Vec2& v : sr.polygon.vertices()) CHECK(v.norm() == doctest::Approx(1.0));
}

TEST_CASE("plane_section: cube diagonal section vs radial sampling oracle") {
  const Polytope3 cube = make_cube(1.0);
  const double s = 1.0 / std::sqrt(3.0);
  const PlaneThroughOrigin plane = orthonormal_basis({s, s, s});
  const Polygon2 hex = plane_section(cube, plane).polygon;
  REQUIRE(hex.size() == 6);

  // Independent oracle: the section's radial function from raw facet data,
  // r(theta) = min over facets of offset / (in-plane normal · direction).
  for (int k = 0; k < 720; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / 720.0;
    const Vec2 w{std::cos(theta), std::sin(theta)};
    double radial = std::numeric_limits<double>::infinity();
    for (const auto& f : cube.facets) {
      const Vec2 a{f.normal.dot(plane.u1), f.normal.dot(plane.u2)};
      const double denom = a.dot(w);
      if (denom > 1e-12) radial = std::min(radial, f.offset / denom);
    }
    // Walk the polygon boundary in direction w: max t with t·w inside.
    double lo = 0.0, hi = 4.0;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (hex.contains(w * mid, 1e-12) ? lo : hi) = mid;
    }
    CHECK(lo == doctest::Approx(radial).epsilon(1e-9));
  }
}

TEST_CASE("plane_section: section is contained in the shadow") {
  Rng rng(77);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Polytope3 body = random_polytope(8 + static_cast<int>(seed) * 4, 50 + seed);
    const PlaneThroughOrigin plane = orthonormal_basis(rng.unit_vector());
    const Polygon2 section = plane_section(body, plane).polygon;
    const Polygon2 shadow = project_polytope(body, plane);
    for (const Vec2& v : section.vertices()) CHECK(shadow.contains(v, 1e-9));
  }
}

TEST_CASE("polar_dual_2d: square <-> diamond involution") {
  const Polygon2 sq =
      Polygon2::from_cycle({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  const Polygon2 dia = polar_dual_2d(sq);
  REQUIRE(dia.size() == 4);
  for (const Vec2& v : dia.vertices()) CHECK(v.norm() == doctest::Approx(1.0));
  const Polygon2 back = polar_dual_2d(dia);
  REQUIRE(back.size() == 4);
  CHECK(hausdorff_polygons(back, sq) < 1e-12);
}

TEST_CASE("polar_dual_2d: regular pentagon scales by 1/(r cos(pi/n))") {
  const int n = 5;
  const double r = 2.0;
  std::vector<Vec2> cycle;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    cycle.push_back({r * std::cos(t), r * std::sin(t)});
  }
  const Polygon2 gon = Polygon2::from_cycle(cycle);
  const Polygon2 dual = polar_dual_2d(gon);
  REQUIRE(dual.size() == 5);
  const double expected = 1.0 / (r * std::cos(std::numbers::pi / n));
  for (const Vec2& v : dual.vertices()) {
    CHECK(v.norm() == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("polar_dual_2d: rejects polygons without the origin inside") {
  const Polygon2 shifted =
      Polygon2::from_cycle({{1, 1}, {2, 1}, {2, 2}, {1, 2}});
  CHECK_THROWS_AS(polar_dual_2d(shifted), OriginNotInterior);
  const Polygon2 seg = convex_hull_2d({{-1, 0}, {1, 0}});
  CHECK_THROWS_AS(polar_dual_2d(seg), OriginNotInterior);
}

TEST_CASE("intersect_halfplanes: duplicates collapse, starvation errors") {
  std::vector<Halfplane> square_planes = {
      {{1, 0}, 1}, {{0, 1}, 1}, {{-1, 0}, 1}, {{0, -1}, 1},
      {{1, 0}, 1}, {{2, 0}, 4},  // duplicates / slack parallels
  };
  const Polygon2 sq = intersect_halfplanes(square_planes);
  REQUIRE(sq.size() == 4);
  CHECK(sq.area() == doctest::Approx(4.0));

  CHECK_THROWS_AS(intersect_halfplanes({{{1, 0}, 1}, {{-1, 0}, 1}}), DegenerateInput);
}

TEST_CASE("verify_prop1: cube with the z = 0 plane forces the diamond on both sides") {
  const Prop1Report r = verify_prop1(make_cube(1.0), orthonormal_basis({0, 0, 1}));
  CHECK(r.pass);
  CHECK(r.lhs_vertices == 4);
  CHECK(r.rhs_vertices == 4);
  CHECK(r.hausdorff <= 1e-12);
  for (const Vec2& v : r.lhs.vertices()) CHECK(v.norm() == doctest::Approx(1.0));
}

TEST_CASE("verify_prop1: random body across random planes") {
  const Polytope3 body = random_polytope(30, 7);
  Rng rng(123);
  for (int i = 0; i < 20; ++i) {
    const Prop1Report r = verify_prop1(body, orthonormal_basis(rng.unit_vector()));
    CHECK(r.pass);
    CHECK(r.hausdorff <= std::max(1e-9, 1e-7 * r.diameter));
  }
}

TEST_CASE("verify_prop1: off-center bodies still satisfy the identity") {
  Rng rng(55);
  int tested = 0;
  for (std::uint64_t seed = 0; seed < 12 && tested < 5; ++seed) {
    const Polytope3 body = random_polytope(30, 60 + seed);
    // Translate while keeping the origin strictly interior.
    const Vec3 shift = rng.unit_vector() * (0.35 * body.inradius());
    std::vector<Vec3> moved;
    for (const Vec3& v : body.vertices) moved.push_back(v + shift);
    const Polytope3 translated = convex_hull_3d(moved);
    if (translated.inradius() < 1e-3) continue;
    tested++;
    for (int i = 0; i < 5; ++i) {
      const Prop1Report r = verify_prop1(translated, orthonormal_basis(rng.unit_vector()));
      CHECK(r.pass);
    }
  }
  CHECK(tested == 5);
}

TEST_CASE("verify_prop1_oracle: unit ball has radial one everywhere") {
  const auto ball = ellipsoid_oracle(1, 1, 1);
  const Prop1OracleReport r = verify_prop1_oracle(*ball, orthonormal_basis({0, 0, 1}), 90);
  CHECK(r.pass);
  CHECK(r.max_rel_discrepancy < 1e-12);
}

TEST_CASE("verify_prop1_oracle: ellipsoid axis direction and full sweep") {
  const auto e = ellipsoid_oracle(2, 1, 1);
  const PlaneThroughOrigin plane = orthonormal_basis({0, 0, 1});
  // 1/h along +x must be 1/2.
  CHECK(1.0 / e->eval({1, 0, 0}).value == doctest::Approx(0.5));
  const Prop1OracleReport r = verify_prop1_oracle(*e, plane, 360);
  CHECK(r.pass);
  CHECK(r.n_dirs == 360);
  CHECK(r.max_rel_discrepancy < 1e-10);
}

TEST_CASE("projection restricts the support function") {
  const Polytope3 body = random_polytope(25, 19);
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const PlaneThroughOrigin plane = orthonormal_basis(rng.unit_vector());
    const Polygon2 shadow = project_polytope(body, plane);
    const auto oracle = polytope_oracle(body);
    for (int k = 0; k < 64; ++k) {
      const double t = 2.0 * std::numbers::pi * k / 64.0;
      const Vec2 w{std::cos(t), std::sin(t)};
      const double h2 = shadow.support(w);
      const double h3 = oracle->eval(plane.from_plane(w)).value;
      CHECK(h2 == doctest::Approx(h3).epsilon(1e-9));
    }
  }
}
