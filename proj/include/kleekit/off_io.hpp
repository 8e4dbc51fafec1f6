#pragma once

#include <iosfwd>
#include <string>

#include "kleekit/polytope.hpp"
#include "kleekit/tolerance.hpp"

namespace kleekit {

// ASCII OFF: "OFF" header, counts line (vertices facets edges), vertex
// coordinate lines, then per-facet index lines "k i0 ... i(k-1)". Blank
// lines and '#' comments are skipped. Facet planes are recomputed from the
// vertex cycles on read (Newell), oriented outward, and the result is
// validated; malformed input throws ParseError.
Polytope3 read_off(std::istream& in, const ToleranceCfg& cfg = {});
Polytope3 read_off_file(const std::string& path, const ToleranceCfg& cfg = {});

void write_off(std::ostream& out, const Polytope3& poly);
void write_off_file(const std::string& path, const Polytope3& poly);

}  // namespace kleekit
