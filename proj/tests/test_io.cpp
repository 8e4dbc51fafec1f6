#include <doctest.h>

#include <sstream>

#include "kleekit/bodies.hpp"
#include "kleekit/errors.hpp"
#include "kleekit/off_io.hpp"
#include "kleekit/svg.hpp"

using namespace kleekit;

TEST_CASE("OFF round trip preserves geometry bit-exactly") {
  for (const Polytope3& original :
       {make_cube(1.0), make_dodecahedron(), random_polytope(30, 7)}) {
    std::stringstream buf;
    write_off(buf, original);
    const Polytope3 back = read_off(buf);
    REQUIRE(back.vertex_count() == original.vertex_count());
    REQUIRE(back.facet_count() == original.facet_count());
    for (std::size_t i = 0; i < original.vertex_count(); ++i) {
      CHECK(distance(back.vertices[i], original.vertices[i]) == 0.0);
    }
    for (std::size_t f = 0; f < original.facet_count(); ++f) {
      CHECK((back.facets[f].normal - original.facets[f].normal).norm() < 1e-12);
      CHECK(back.facets[f].offset == doctest::Approx(original.facets[f].offset).epsilon(1e-12));
    }
    back.validate();
  }
}

TEST_CASE("OFF reader skips comments and blank lines") {
  std::stringstream buf;
  buf << "OFF\n# a comment\n\n4 4 6\n"
      << "1 1 1\n1 -1 -1\n-1 1 -1\n-1 -1 1\n"
      << "3 0 1 2\n3 0 1 3\n3 0 2 3\n3 1 2 3\n";
  const Polytope3 tet = read_off(buf);
  CHECK(tet.vertex_count() == 4);
  CHECK(tet.facet_count() == 4);
}

TEST_CASE("OFF reader rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::stringstream buf(text);
    return read_off(buf);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("PLY\n4 4 6\n"), ParseError);
  CHECK_THROWS_AS(parse("OFF\n4 4\n"), ParseError);  // counts line needs three fields
  CHECK_THROWS_AS(parse("OFF\n4 4 6\n0 0 0\n"), ParseError);  // truncated vertices
  CHECK_THROWS_AS(parse("OFF\n4 4 6\n1 1 1\n1 -1 -1\n-1 1 -1\n-1 -1 1\n3 0 1 9\n"), ParseError);
  // Structurally broken geometry (all facets the same) fails validation.
  CHECK_THROWS_AS(parse("OFF\n4 4 6\n1 1 1\n1 -1 -1\n-1 1 -1\n-1 -1 1\n"
                        "3 0 1 2\n3 0 1 2\n3 0 1 2\n3 0 1 2\n"),
                  ParseError);
  CHECK_THROWS_AS(read_off_file("/nonexistent/path.off"), ParseError);
}

TEST_CASE("SVG output is deterministic and well-formed") {
  auto render = [] {
    SvgWriter svg(200, 200);
    svg.set_world_box({-1, -1}, {1, 1});
    svg.add_polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, "#1f77b4", "#1f77b4");
    svg.add_polyline({{-1, 0}, {1, 0}}, "#d62728", 1.0, true);
    svg.add_circle({0, 0}, 3.0, "#2ca02c");
    svg.add_label(10, 18, "caption");
    return svg.str();
  };
  const std::string a = render();
  const std::string b = render();
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("polygon") != std::string::npos);
  CHECK(a.find("stroke-dasharray") != std::string::npos);
}
