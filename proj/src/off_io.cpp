#include "kleekit/off_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kleekit/errors.hpp"

namespace kleekit {

namespace {

// Next content line: comments and blank lines skipped.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Polytope3 read_off(std::istream& in, const ToleranceCfg& cfg) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("OFF: empty input");
  {
    std::istringstream ss(line);
    std::string header;
    ss >> header;
    if (header != "OFF") throw ParseError("OFF: missing OFF header");
  }

  if (!next_line(in, line)) throw ParseError("OFF: missing counts line");
  std::size_t nv = 0, nf = 0, ne = 0;
  {
    std::istringstream ss(line);
    if (!(ss >> nv >> nf >> ne)) throw ParseError("OFF: malformed counts line");
  }
  if (nv < 4 || nf < 4) throw ParseError("OFF: a polytope needs >= 4 vertices and facets");

  Polytope3 poly;
  poly.vertices.reserve(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    if (!next_line(in, line)) throw ParseError("OFF: truncated vertex list");
    std::istringstream ss(line);
    Vec3 v;
    if (!(ss >> v.x >> v.y >> v.z)) throw ParseError("OFF: malformed vertex line");
    if (!v.finite()) throw ParseError("OFF: non-finite vertex");
    poly.vertices.push_back(v);
  }

  Vec3 centroid{};
  for (const Vec3& v : poly.vertices) centroid = centroid + v;
  centroid = centroid / static_cast<double>(nv);

  poly.facets.reserve(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    if (!next_line(in, line)) throw ParseError("OFF: truncated facet list");
    std::istringstream ss(line);
    std::size_t k = 0;
    if (!(ss >> k) || k < 3) throw ParseError("OFF: facet with fewer than 3 indices");
    Polytope3::Facet facet;
    facet.vertex_indices.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      long idx = -1;
      if (!(ss >> idx) || idx < 0 || static_cast<std::size_t>(idx) >= nv) {
        throw ParseError("OFF: facet index out of range");
      }
      facet.vertex_indices.push_back(static_cast<int>(idx));
    }

    // Newell plane from the cycle, oriented away from the centroid.
    Vec3 n{};
    for (std::size_t j = 0; j < k; ++j) {
      const Vec3& a = poly.vertices[static_cast<std::size_t>(facet.vertex_indices[j])];
      const Vec3& b = poly.vertices[static_cast<std::size_t>(facet.vertex_indices[(j + 1) % k])];
      n.x += (a.y - b.y) * (a.z + b.z);
      n.y += (a.z - b.z) * (a.x + b.x);
      n.z += (a.x - b.x) * (a.y + b.y);
    }
    const double len = n.norm();
    if (!(len > 0.0)) throw ParseError("OFF: facet cycle has no area");
    facet.normal = n / len;
    double offset = 0.0;
    for (int vi : facet.vertex_indices) {
      offset += facet.normal.dot(poly.vertices[static_cast<std::size_t>(vi)]);
    }
    offset /= static_cast<double>(k);
    if (facet.normal.dot(centroid) > offset) {
      facet.normal = -facet.normal;
      offset = -offset;
      std::reverse(facet.vertex_indices.begin(), facet.vertex_indices.end());
    }
    facet.offset = offset;
    poly.facets.push_back(std::move(facet));
  }

  try {
    poly.validate(cfg);
  } catch (const DegenerateInput& e) {
    throw ParseError(std::string("OFF: invalid polytope: ") + e.what());
  }
  return poly;
}

Polytope3 read_off_file(const std::string& path, const ToleranceCfg& cfg) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_off(in, cfg);
}

void write_off(std::ostream& out, const Polytope3& poly) {
  std::size_t edge_count = 0;
  for (const auto& f : poly.facets) edge_count += f.vertex_indices.size();
  edge_count /= 2;  // every edge shared by exactly two facets

  out << "OFF\n";
  out << poly.vertices.size() << ' ' << poly.facets.size() << ' ' << edge_count << '\n';
  char buf[96];
  for (const Vec3& v : poly.vertices) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v.x, v.y, v.z);
    out << buf;
  }
  for (const auto& f : poly.facets) {
    out << f.vertex_indices.size();
    for (int vi : f.vertex_indices) out << ' ' << vi;
    out << '\n';
  }
}

void write_off_file(const std::string& path, const Polytope3& poly) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  write_off(out, poly);
}

}  // namespace kleekit
