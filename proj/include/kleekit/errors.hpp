#pragma once

#include <stdexcept>
#include <string>

namespace kleekit {

// Base for every error this library throws on contract violation.
struct GeomError : std::runtime_error {
  explicit GeomError(const std::string& what) : std::runtime_error(what) {}
};

struct NonUnitNormal : GeomError {
  explicit NonUnitNormal(const std::string& w = "normal is not unit length") : GeomError(w) {}
};
struct EmptyInput : GeomError {
  explicit EmptyInput(const std::string& w = "empty input") : GeomError(w) {}
};
struct DegenerateInput : GeomError {
  explicit DegenerateInput(const std::string& w = "degenerate input") : GeomError(w) {}
};
struct DegeneratePolygon : GeomError {
  explicit DegeneratePolygon(const std::string& w = "degenerate polygon") : GeomError(w) {}
};
struct NonPositiveSize : GeomError {
  explicit NonPositiveSize(const std::string& w = "size must be positive") : GeomError(w) {}
};
struct GenerationFailed : GeomError {
  explicit GenerationFailed(const std::string& w = "random generation failed") : GeomError(w) {}
};
struct NonPositiveAxis : GeomError {
  explicit NonPositiveAxis(const std::string& w = "semi-axis must be positive") : GeomError(w) {}
};
struct ZeroDirection : GeomError {
  explicit ZeroDirection(const std::string& w = "direction must be nonzero") : GeomError(w) {}
};
struct OriginNotInterior : GeomError {
  explicit OriginNotInterior(const std::string& w = "origin is not strictly interior") : GeomError(w) {}
};
struct FlatBody : GeomError {
  explicit FlatBody(const std::string& w = "planar body has no interior") : GeomError(w) {}
};
struct DegeneratePair : GeomError {
  explicit DegeneratePair(const std::string& w = "point pair is degenerate") : GeomError(w) {}
};
struct NonConvergentSequence : GeomError {
  explicit NonConvergentSequence(const std::string& w = "sequence does not converge") : GeomError(w) {}
};
struct NonPositiveSupport : GeomError {
  explicit NonPositiveSupport(const std::string& w = "support function is not positive") : GeomError(w) {}
};
struct ParseError : GeomError {
  explicit ParseError(const std::string& w = "parse error") : GeomError(w) {}
};
struct InvalidConfig : GeomError {
  explicit InvalidConfig(const std::string& w = "invalid configuration") : GeomError(w) {}
};

// Distinguishes "hypotheses do not hold" from "conclusion is false" in the
// proof-step checks. The failed hypothesis is carried verbatim.
struct PreconditionViolated : GeomError {
  enum class Which {
    PointsNotInBody,
    XNotBetween,
    SegmentLeavesBoundary,
  };
  Which which;
  PreconditionViolated(Which w, const std::string& msg)
      : GeomError(msg), which(w) {}
};

}  // namespace kleekit
