#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "kleekit/bodies.hpp"
#include "kleekit/errors.hpp"
#include "kleekit/polytope.hpp"
#include "kleekit/rng.hpp"

using namespace kleekit;

TEST_CASE("convex_hull_3d: cube corners give 8 vertices and 6 quad facets") {
  std::vector<Vec3> corners;
  for (double sx : {-1.0, 1.0}) {
    for (double sy : {-1.0, 1.0}) {
      for (double sz : {-1.0, 1.0}) corners.push_back({sx, sy, sz});
    }
  }
  const Polytope3 cube = convex_hull_3d(corners);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.facet_count() == 6);
  for (const auto& f : cube.facets) CHECK(f.vertex_indices.size() == 4);
}

TEST_CASE("convex_hull_3d: interior point is dropped") {
  std::vector<Vec3> pts;
  for (double sx : {-1.0, 1.0}) {
    for (double sy : {-1.0, 1.0}) {
      for (double sz : {-1.0, 1.0}) pts.push_back({sx, sy, sz});
    }
  }
  pts.push_back({0, 0, 0});
  pts.push_back({0.5, -0.25, 0.25});
  const Polytope3 cube = convex_hull_3d(pts);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.facet_count() == 6);
}

TEST_CASE("convex_hull_3d: mid-edge and mid-face points do not become vertices") {
  std::vector<Vec3> pts;
  for (double sx : {-1.0, 1.0}) {
    for (double sy : {-1.0, 1.0}) {
      for (double sz : {-1.0, 1.0}) pts.push_back({sx, sy, sz});
    }
  }
  pts.push_back({1.0, 0.0, 0.0});   // center of facet x = 1
  pts.push_back({1.0, 1.0, 0.0});   // midpoint of an edge
  const Polytope3 cube = convex_hull_3d(pts);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.facet_count() == 6);
}

TEST_CASE("convex_hull_3d: halfspace membership oracle on random sphere points") {
  Rng rng(5);
  std::vector<Vec3> pts;
  for (int i = 0; i < 50; ++i) pts.push_back(rng.unit_vector());
  const Polytope3 hull = convex_hull_3d(pts);
  // Every input point satisfies every facet halfspace (brute force, straight
  // from the definition).
  for (const Vec3& p : pts) {
    for (const auto& f : hull.facets) {
      CHECK(f.normal.dot(p) <= f.offset + 1e-9);
    }
  }
}

TEST_CASE("convex_hull_3d: rejects degenerate input") {
  CHECK_THROWS_AS(convex_hull_3d({}), EmptyInput);
  CHECK_THROWS_AS(convex_hull_3d({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), DegenerateInput);
  // coplanar
  CHECK_THROWS_AS(convex_hull_3d({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0.3, 0.4, 0}}),
                  DegenerateInput);
  // collinear
  CHECK_THROWS_AS(convex_hull_3d({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}}), DegenerateInput);
}

TEST_CASE("Polytope3: V/H consistency across random hulls") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    std::vector<Vec3> pts;
    const int n = 8 + static_cast<int>(rng.next_u64() % 43);
    for (int i = 0; i < n; ++i) pts.push_back(rng.unit_vector());
    const Polytope3 hull = convex_hull_3d(pts);
    hull.validate();  // throws on any invariant failure

    // Incident vertices sit on their facet planes; all vertices inside.
    for (const auto& f : hull.facets) {
      for (int vi : f.vertex_indices) {
        CHECK(std::abs(f.normal.dot(hull.vertices[static_cast<std::size_t>(vi)]) - f.offset) <=
              1e-9);
      }
      for (const Vec3& v : hull.vertices) CHECK(f.normal.dot(v) <= f.offset + 1e-9);
    }
    // Every vertex lies on at least 3 facet planes.
    const auto incident = hull.vertex_facets();
    for (const auto& facets_at : incident) CHECK(facets_at.size() >= 3);
  }
}

TEST_CASE("Polytope3: validate rejects corrupted bodies") {
  Polytope3 cube = make_cube(1.0);
  SUBCASE("vertex pushed outside a halfspace") {
    cube.vertices[0] = cube.vertices[0] * 1.5;
    CHECK_THROWS_AS(cube.validate(), DegenerateInput);
  }
  SUBCASE("non-unit facet normal") {
    cube.facets[0].normal = cube.facets[0].normal * 2.0;
    CHECK_THROWS_AS(cube.validate(), DegenerateInput);
  }
  SUBCASE("facet with too few vertices") {
    cube.facets[0].vertex_indices.resize(2);
    CHECK_THROWS_AS(cube.validate(), DegenerateInput);
  }
}

TEST_CASE("Polytope3: boundary and containment predicates") {
  const Polytope3 cube = make_cube(1.0);
  CHECK(cube.contains({0, 0, 0}));
  CHECK(cube.contains({1, 1, 1}));
  CHECK_FALSE(cube.contains({1.001, 0, 0}));
  CHECK(cube.on_boundary({1, 0.3, -0.2}));
  CHECK_FALSE(cube.on_boundary({0, 0, 0}));
  CHECK(cube.inradius() == doctest::Approx(1.0));
  CHECK(cube.circumradius() == doctest::Approx(std::sqrt(3.0)));
  CHECK(cube.diameter() == doctest::Approx(2.0 * std::sqrt(3.0)));
}
