#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "kleekit/errors.hpp"
#include "kleekit/plane.hpp"
#include "kleekit/polygon.hpp"
#include "kleekit/rng.hpp"

using namespace kleekit;

namespace {

// Independent Hausdorff oracle: dense boundary sampling on both polygons.
double sampled_hausdorff(const Polygon2& a, const Polygon2& b, int per_edge = 4000) {
  auto boundary = [&](const Polygon2& poly) {
    std::vector<Vec2> pts;
    const auto& v = poly.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec2& s = v[i];
      const Vec2& t = v[(i + 1) % v.size()];
      for (int k = 0; k < per_edge; ++k) {
        pts.push_back(s + (t - s) * (static_cast<double>(k) / per_edge));
      }
    }
    return pts;
  };
  auto one_sided = [&](const std::vector<Vec2>& from, const Polygon2& to) {
    double worst = 0.0;
    for (const Vec2& p : from) worst = std::max(worst, distance_to_polygon(p, to));
    return worst;
  };
  return std::max(one_sided(boundary(a), b), one_sided(boundary(b), a));
}

Polygon2 square(double half, Vec2 center = {0, 0}) {
  return Polygon2::from_cycle({{center.x - half, center.y - half},
                               {center.x + half, center.y - half},
                               {center.x + half, center.y + half},
                               {center.x - half, center.y + half}});
}

Polygon2 diamond(double r) {
  return Polygon2::from_cycle({{r, 0}, {0, r}, {-r, 0}, {0, -r}});
}

}  // namespace

TEST_CASE("orthonormal_basis: canonical axis choices") {
  const auto pz = orthonormal_basis({0, 0, 1});
  CHECK(distance(pz.u1, {1, 0, 0}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(distance(pz.u2, {0, 1, 0}) == doctest::Approx(0.0).epsilon(1e-15));

  const auto px = orthonormal_basis({1, 0, 0});
  CHECK(std::abs(px.u1.dot(px.n)) < 1e-12);
  CHECK(std::abs(px.u2.dot(px.n)) < 1e-12);
  CHECK((px.u1.cross(px.u2) - px.n).norm() < 1e-12);
}

TEST_CASE("orthonormal_basis: oblique normal satisfies all frame invariants") {
  const double s = 1.0 / std::sqrt(3.0);
  const auto plane = orthonormal_basis({s, s, s});
  CHECK(plane.frame_defect() < 1e-12);
}

TEST_CASE("orthonormal_basis: rejects non-unit input") {
  CHECK_THROWS_AS(orthonormal_basis({0, 0, 2}), NonUnitNormal);
  CHECK_THROWS_AS(orthonormal_basis({0, 0, 0}), NonUnitNormal);
}

TEST_CASE("orthonormal_basis: frame invariants over a million random normals") {
  Rng rng(7);
  double worst = 0.0;
  for (int i = 0; i < 1000000; ++i) {
    worst = std::max(worst, orthonormal_basis(rng.unit_vector()).frame_defect());
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("convex_hull_2d: interior point dropped, canonical start") {
  const Polygon2 tri = convex_hull_2d({{0, 0}, {1, 0}, {0, 1}, {0.25, 0.25}});
  REQUIRE(tri.size() == 3);
  CHECK(tri.vertices()[0].x == 0.0);
  CHECK(tri.vertices()[0].y == 0.0);
  CHECK(tri.area() == doctest::Approx(0.5));
}

TEST_CASE("convex_hull_2d: unit square from shuffled corners") {
  const Polygon2 sq = convex_hull_2d({{1, 1}, {0, 1}, {0, 0}, {1, 0}});
  REQUIRE(sq.size() == 4);
  CHECK(sq.vertices()[0].x == 0.0);  // lexicographically smallest first
  CHECK(sq.vertices()[0].y == 0.0);
  CHECK(sq.area() == doctest::Approx(1.0));  // CCW gives positive area
}

TEST_CASE("convex_hull_2d: 1000 disk points stay inside, area below pi") {
  Rng rng(3);
  std::vector<Vec2> pts;
  for (int i = 0; i < 1000; ++i) {
    const Vec2 d = rng.unit_vector_2d();
    const double r = std::sqrt(rng.uniform01());
    pts.push_back(d * r);
  }
  const Polygon2 hull = convex_hull_2d(pts);
  CHECK(hull.area() <= std::numbers::pi);
  for (const Vec2& p : pts) CHECK(hull.contains(p, 1e-9));
}

TEST_CASE("convex_hull_2d: errors and degeneracies") {
  CHECK_THROWS_AS(convex_hull_2d({}), EmptyInput);
  const Polygon2 pt = convex_hull_2d({{1, 2}});
  CHECK(pt.kind() == Polygon2::Kind::Point);
  const Polygon2 seg = convex_hull_2d({{0, 0}, {1, 1}, {0.5, 0.5}});
  CHECK(seg.kind() == Polygon2::Kind::Segment);
  CHECK(seg.degenerate());
}

TEST_CASE("convex_hull_2d: idempotence on random point sets") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec2> pts;
    const int n = 3 + static_cast<int>(rng.next_u64() % 60);
    for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(-2, 2), rng.uniform(-2, 2)});
    const Polygon2 hull = convex_hull_2d(pts);
    const Polygon2 again = convex_hull_2d(hull.vertices());
    REQUIRE(hull.size() == again.size());
    for (std::size_t i = 0; i < hull.size(); ++i) {
      CHECK(distance(hull.vertices()[i], again.vertices()[i]) < 1e-12);
    }
  }
}

TEST_CASE("hausdorff_polygons: identical squares and translates") {
  CHECK(hausdorff_polygons(square(0.5), square(0.5)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(hausdorff_polygons(square(0.5), square(0.5, {0.1, 0.0})) == doctest::Approx(0.1));
}

TEST_CASE("hausdorff_polygons: square vs inscribed diamond") {
  const Polygon2 sq = square(1.0);
  const Polygon2 dia = diamond(1.0);
  // Oracle first: dense boundary sampling pins the value. The corner (1,1)
  // against the edge x + y = 1 gives 1/sqrt(2); freeze that.
  const double frozen = 1.0 / std::numbers::sqrt2;
  const double sampled = sampled_hausdorff(sq, dia);
  CHECK(sampled == doctest::Approx(frozen).epsilon(1e-6));
  CHECK(hausdorff_polygons(sq, dia) == doctest::Approx(frozen).epsilon(1e-12));
}

TEST_CASE("hausdorff_polygons: square vs circumscribed diamond") {
  // Diamond through (±sqrt(2), 0), (0, ±sqrt(2)): both one-sided distances
  // equal sqrt(2) - 1 (square corner to edge, diamond tip to square side).
  const Polygon2 sq = square(1.0);
  const Polygon2 dia = diamond(std::numbers::sqrt2);
  const double frozen = std::numbers::sqrt2 - 1.0;
  const double sampled = sampled_hausdorff(sq, dia);
  CHECK(sampled == doctest::Approx(frozen).epsilon(1e-6));
  CHECK(hausdorff_polygons(sq, dia) == doctest::Approx(frozen).epsilon(1e-12));
}

TEST_CASE("hausdorff_polygons: rejects degenerate input") {
  const Polygon2 seg = convex_hull_2d({{0, 0}, {1, 0}});
  CHECK_THROWS_AS(hausdorff_polygons(seg, square(1.0)), DegeneratePolygon);
}

TEST_CASE("hausdorff_polygons: symmetry and triangle inequality") {
  Rng rng(23);
  auto random_polygon = [&]() {
    std::vector<Vec2> pts;
    const int n = 3 + static_cast<int>(rng.next_u64() % 12);
    for (int i = 0; i < n + 3; ++i) pts.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3)});
    return convex_hull_2d(pts);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Polygon2 a = random_polygon();
    const Polygon2 b = random_polygon();
    const Polygon2 c = random_polygon();
    if (a.degenerate() || b.degenerate() || c.degenerate()) continue;
    const double ab = hausdorff_polygons(a, b);
    const double ba = hausdorff_polygons(b, a);
    const double ac = hausdorff_polygons(a, c);
    const double cb = hausdorff_polygons(c, b);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
    CHECK(ab <= ac + cb + 1e-9);
  }
}

TEST_CASE("Polygon2: support point ties break to the lowest vertex index") {
  const Polygon2 sq = square(1.0);
  const auto& verts = sq.vertices();
  std::size_t first_top = 0;
  while (first_top < verts.size() && verts[first_top].y != 1.0) first_top++;
  REQUIRE(first_top < verts.size());
  CHECK(distance(sq.support_point({0, 1}), verts[first_top]) == 0.0);
  CHECK(sq.support({0, 1}) == doctest::Approx(1.0));
}
