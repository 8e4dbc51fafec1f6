#include "kleekit/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "kleekit/analysis.hpp"
#include "kleekit/duality.hpp"
#include "kleekit/errors.hpp"
#include "kleekit/off_io.hpp"
#include "kleekit/rng.hpp"
#include "kleekit/svg.hpp"

namespace kleekit {

namespace {

std::vector<std::string> split(const std::string& s, char delim) {
  std::vector<std::string> parts;
  std::string piece;
  std::istringstream ss(s);
  while (std::getline(ss, piece, delim)) parts.push_back(piece);
  return parts;
}

double parse_double(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError("cannot parse number '" + s + "' in " + context);
  }
}

long parse_long(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError("cannot parse integer '" + s + "' in " + context);
  }
}

Vec3 parse_normal(const std::string& spec) {
  const auto parts = split(spec, ',');
  if (parts.size() != 3) throw ParseError("plane normal must be 'x,y,z': " + spec);
  return {parse_double(parts[0], spec), parse_double(parts[1], spec), parse_double(parts[2], spec)};
}

Report tolerance_json(const ToleranceCfg& tol) {
  Report j;
  j["eps_geom"] = tol.eps_geom;
  j["eps_rel"] = tol.eps_rel;
  j["cluster_radius"] = tol.cluster_radius;
  j["threshold_fraction"] = tol.threshold_fraction;
  return j;
}

Report vec3_json(const Vec3& v) { return Report::array({v.x, v.y, v.z}); }
Report vec2_json(const Vec2& v) { return Report::array({v.x, v.y}); }

Report polygon_json(const Polygon2& poly) {
  Report arr = Report::array();
  for (const Vec2& v : poly.vertices()) arr.push_back(vec2_json(v));
  return arr;
}

Report envelope(const RunConfig& cfg, const std::string& command) {
  Report j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["seed"] = cfg.seed;
  j["tolerance"] = tolerance_json(cfg.tol);
  return j;
}

struct Tally {
  int checks = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  void pass() { checks++; passed++; }
  void fail() { checks++; failed++; }
  void skip() { checks++; skipped++; }
  void count(bool ok) { ok ? pass() : fail(); }

  Report json() const {
    Report j;
    j["checks"] = checks;
    j["passed"] = passed;
    j["failed"] = failed;
    j["skipped"] = skipped;
    return j;
  }
};

// Geometric precondition violations are SKIPPED (visible, never silently
// passed). Misconfiguration fails the affected checks but the run completes,
// so the failure stays isolated in the report. Anything else aborts the run.
enum class CaseOutcome { Skip, Fail, Abort };

CaseOutcome classify(const GeomError& e) {
  if (dynamic_cast<const PreconditionViolated*>(&e) || dynamic_cast<const OriginNotInterior*>(&e) ||
      dynamic_cast<const DegeneratePair*>(&e) || dynamic_cast<const FlatBody*>(&e) ||
      dynamic_cast<const NonConvergentSequence*>(&e) ||
      dynamic_cast<const NonPositiveSupport*>(&e)) {
    return CaseOutcome::Skip;
  }
  if (dynamic_cast<const InvalidConfig*>(&e)) return CaseOutcome::Fail;
  return CaseOutcome::Abort;
}


// Random convex combination of a facet's vertex cycle: a point of the facet.
Vec3 facet_point(const Polytope3& poly, std::size_t facet_index, Rng& rng) {
  const auto& cycle = poly.facets[facet_index].vertex_indices;
  std::vector<double> w(cycle.size());
  double total = 0.0;
  for (double& wi : w) {
    wi = rng.uniform01() + 1e-9;
    total += wi;
  }
  Vec3 p{};
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    p = p + poly.vertices[static_cast<std::size_t>(cycle[i])] * (w[i] / total);
  }
  return p;
}

const char* kStatusPass = "PASS";
const char* kStatusFail = "FAIL";
const char* kStatusSkipped = "SKIPPED";

// Call only from a catch block: records skip/fail on the case, rethrows on
// Abort.
void record_case_error(const GeomError& e, Report& c, Tally& tally) {
  switch (classify(e)) {
    case CaseOutcome::Skip:
      c["status"] = kStatusSkipped;
      c["reason"] = e.what();
      tally.skip();
      return;
    case CaseOutcome::Fail:
      c["status"] = kStatusFail;
      c["reason"] = e.what();
      tally.fail();
      return;
    case CaseOutcome::Abort:
      break;
  }
  throw;
}

}  // namespace

void validate_tolerance_override(double value, const std::string& flag) {
  if (!(value > 0.0) || value > 1e-2) {
    throw InvalidConfig(flag + " override must lie in (0, 1e-2], got " + std::to_string(value));
  }
}

std::uint64_t derived_seed(std::uint64_t base, std::uint64_t salt) {
  // splitmix64 over the mixed pair
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Body make_body(const std::string& spec, const ToleranceCfg& cfg) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts.empty() ? spec : parts[0];

  auto as_polytope = [&](Polytope3 poly) {
    Body b;
    b.spec = spec;
    b.oracle = polytope_oracle(poly);
    b.polytope = std::move(poly);
    return b;
  };

  if (kind == "cube") {
    const double w = parts.size() > 1 ? parse_double(parts[1], spec) : 1.0;
    return as_polytope(make_cube(w, cfg));
  }
  if (kind == "simplex") return as_polytope(make_simplex(cfg));
  if (kind == "octahedron") {
    const double s = parts.size() > 1 ? parse_double(parts[1], spec) : 1.0;
    return as_polytope(make_octahedron(s, cfg));
  }
  if (kind == "dodecahedron") return as_polytope(make_dodecahedron(cfg));
  if (kind == "random") {
    if (parts.size() != 3) throw ParseError("random body spec must be random:N:SEED, got " + spec);
    const long n = parse_long(parts[1], spec);
    const long seed = parse_long(parts[2], spec);
    return as_polytope(random_polytope(static_cast<int>(n), static_cast<std::uint64_t>(seed), cfg));
  }
  if (kind == "ellipsoid") {
    if (parts.size() != 4) throw ParseError("ellipsoid spec must be ellipsoid:a:b:c, got " + spec);
    Body b;
    b.spec = spec;
    b.oracle = ellipsoid_oracle(parse_double(parts[1], spec), parse_double(parts[2], spec),
                                parse_double(parts[3], spec));
    return b;
  }
  if (kind == "ball") {
    if (parts.size() != 2) throw ParseError("ball spec must be ball:r, got " + spec);
    const double r = parse_double(parts[1], spec);
    Body b;
    b.spec = spec;
    b.oracle = ellipsoid_oracle(r, r, r);
    return b;
  }
  if (std::filesystem::exists(spec)) return as_polytope(read_off_file(spec, cfg));
  throw ParseError("unknown body spec: " + spec);
}

std::vector<NamedPlane> make_planes(const std::vector<std::string>& explicit_normals, int count,
                                    std::uint64_t seed, const ToleranceCfg& cfg) {
  std::vector<NamedPlane> planes;
  if (!explicit_normals.empty()) {
    for (const std::string& spec : explicit_normals) {
      planes.push_back({spec, plane_from_direction(parse_normal(spec), cfg)});
    }
    return planes;
  }
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const Vec3 n = rng.unit_vector();
    planes.push_back({"random[" + std::to_string(i) + "]", orthonormal_basis(n, cfg)});
  }
  return planes;
}

std::vector<std::string> random_suite_specs(int n_bodies) {
  std::vector<std::string> specs;
  specs.reserve(static_cast<std::size_t>(n_bodies));
  for (int i = 0; i < n_bodies; ++i) {
    const int n = 8 + (i * 7) % 43;  // 8..50 sphere points
    specs.push_back("random:" + std::to_string(n) + ":" + std::to_string(i));
  }
  return specs;
}

// ---------------------------------------------------------------------------
// File-producing commands
// ---------------------------------------------------------------------------

Report run_dual(const RunConfig& cfg) {
  Report rep = envelope(cfg, "dual");
  rep["body"] = cfg.body;
  Tally tally;

  const Body body = make_body(cfg.body, cfg.tol);
  if (!body.is_polytope()) {
    throw InvalidConfig("dual: '" + cfg.body + "' is not a polytope; polar duals of smooth "
                        "bodies have no finite representation");
  }
  const Polytope3 dual = polar_dual(*body.polytope, cfg.tol);
  rep["vertices"] = dual.vertex_count();
  rep["facets"] = dual.facet_count();
  if (!cfg.out_path.empty()) {
    write_off_file(cfg.out_path, dual);
    rep["out"] = cfg.out_path;
  }
  tally.pass();
  rep["summary"] = tally.json();
  return rep;
}

Report run_gen(const RunConfig& cfg) {
  Report rep = envelope(cfg, "gen");
  Tally tally;
  const Polytope3 poly = random_polytope(cfg.n_points, cfg.seed, cfg.tol);
  rep["n_points"] = cfg.n_points;
  rep["vertices"] = poly.vertex_count();
  rep["facets"] = poly.facet_count();
  if (!cfg.out_path.empty()) {
    write_off_file(cfg.out_path, poly);
    rep["out"] = cfg.out_path;
  }
  tally.pass();
  rep["summary"] = tally.json();
  return rep;
}

namespace {

Report polygon_payload(const RunConfig& cfg, const char* command, const Polygon2& poly,
                       const SectionResult* section) {
  Report rep = envelope(cfg, command);
  rep["body"] = cfg.body;
  rep["plane"] = vec3_json(parse_normal(cfg.plane).normalized());
  rep["polygon"] = polygon_json(poly);
  rep["degenerate"] = poly.degenerate();
  if (section) {
    rep["source"] =
        section->source == SectionResult::Source::PolytopeExact ? "PolytopeExact" : "OracleSampled";
    rep["sample_count"] = section->sample_count;
  }
  Tally tally;
  tally.pass();
  rep["summary"] = tally.json();
  if (!cfg.out_path.empty()) {
    // The polygon itself serializes as a JSON array of [x,y] pairs.
    std::ofstream out(cfg.out_path);
    if (!out) throw ParseError("cannot open " + cfg.out_path + " for writing");
    if (section) {
      Report body;
      body["polygon"] = rep["polygon"];
      body["source"] = rep["source"];
      body["sample_count"] = rep["sample_count"];
      out << body.dump(2) << '\n';
    } else {
      out << rep["polygon"].dump() << '\n';
    }
  }
  return rep;
}

}  // namespace

Report run_project(const RunConfig& cfg) {
  const Body body = make_body(cfg.body, cfg.tol);
  if (!body.is_polytope()) {
    throw InvalidConfig("project: '" + cfg.body + "' is not a polytope");
  }
  const PlaneThroughOrigin plane = plane_from_direction(parse_normal(cfg.plane), cfg.tol);
  const Polygon2 shadow = project_polytope(*body.polytope, plane, cfg.tol);
  return polygon_payload(cfg, "project", shadow, nullptr);
}

Report run_section(const RunConfig& cfg) {
  const Body body = make_body(cfg.body, cfg.tol);
  if (!body.is_polytope()) {
    throw InvalidConfig("section: '" + cfg.body + "' is not a polytope");
  }
  const PlaneThroughOrigin plane = plane_from_direction(parse_normal(cfg.plane), cfg.tol);
  const SectionResult section = plane_section(*body.polytope, plane, cfg.tol);
  return polygon_payload(cfg, "section", section.polygon, &section);
}

// ---------------------------------------------------------------------------
// verify-prop1
// ---------------------------------------------------------------------------

Report run_verify_prop1(const RunConfig& cfg) {
  Report rep = envelope(cfg, "verify-prop1");
  const std::vector<std::string> body_specs =
      cfg.bodies.empty() ? std::vector<std::string>{"cube"} : cfg.bodies;
  const std::vector<NamedPlane> planes =
      make_planes(cfg.plane_normals, cfg.random_planes, derived_seed(cfg.seed, 11), cfg.tol);

  rep["bodies"] = body_specs;
  Report plane_list = Report::array();
  for (const NamedPlane& np : planes) plane_list.push_back(vec3_json(np.plane.n));
  rep["planes"] = plane_list;

  const bool embed = !cfg.svg_dir.empty();
  Tally tally;
  double max_hausdorff = 0.0;
  double max_rel = 0.0;
  Report cases = Report::array();

  for (const std::string& spec : body_specs) {
    const Body body = make_body(spec, cfg.tol);
    for (const NamedPlane& np : planes) {
      Report c;
      c["body"] = spec;
      c["plane"] = vec3_json(np.plane.n);
      try {
        if (body.is_polytope()) {
          const Prop1Report r = verify_prop1(*body.polytope, np.plane, cfg.tol);
          c["status"] = r.pass ? kStatusPass : kStatusFail;
          c["lhs_vertices"] = r.lhs_vertices;
          c["rhs_vertices"] = r.rhs_vertices;
          c["hausdorff"] = r.hausdorff;
          c["tolerance"] = r.tolerance;
          c["pass"] = r.pass;
          if (embed) {
            c["lhs_polygon"] = polygon_json(r.lhs);
            c["rhs_polygon"] = polygon_json(r.rhs);
          }
          max_hausdorff = std::max(max_hausdorff, r.hausdorff);
          tally.count(r.pass);
        } else {
          const Prop1OracleReport r = verify_prop1_oracle(*body.oracle, np.plane, 360);
          c["status"] = r.pass ? kStatusPass : kStatusFail;
          c["n_dirs"] = r.n_dirs;
          c["max_rel_discrepancy"] = r.max_rel_discrepancy;
          c["tolerance"] = r.tolerance;
          c["pass"] = r.pass;
          max_rel = std::max(max_rel, r.max_rel_discrepancy);
          tally.count(r.pass);
        }
      } catch (const GeomError& e) {
        record_case_error(e, c, tally);
      }
      cases.push_back(std::move(c));
    }
  }

  rep["cases"] = std::move(cases);
  rep["max_hausdorff"] = max_hausdorff;
  rep["max_rel_discrepancy"] = max_rel;
  rep["summary"] = tally.json();
  return rep;
}

// ---------------------------------------------------------------------------
// klee-forward
// ---------------------------------------------------------------------------

Report run_klee_forward(const RunConfig& cfg) {
  Report rep = envelope(cfg, "klee-forward");
  const std::vector<std::string> body_specs =
      cfg.bodies.empty() ? std::vector<std::string>{"cube", "ball:1"} : cfg.bodies;
  const std::vector<NamedPlane> planes =
      make_planes(cfg.plane_normals, cfg.random_planes, derived_seed(cfg.seed, 23), cfg.tol);

  rep["bodies"] = body_specs;
  rep["n_planes"] = planes.size();

  Tally tally;
  Report cases = Report::array();
  for (const std::string& spec : body_specs) {
    const Body body = make_body(spec, cfg.tol);
    const bool expect_polygon = body.is_polytope();
    for (const NamedPlane& np : planes) {
      Report c;
      c["body"] = spec;
      c["plane"] = vec3_json(np.plane.n);
      c["expect_polygon"] = expect_polygon;
      try {
        PolygonVerdict verdict;
        if (body.is_polytope()) {
          const Polygon2 shadow = project_polytope(*body.polytope, np.plane, cfg.tol);
          verdict = detect_polygon(*polygon_oracle(shadow), cfg.tol, cfg.max_samples);
        } else {
          verdict = detect_polygon(*projected_oracle(body.oracle, np.plane), cfg.tol,
                                   cfg.max_samples);
        }
        bool pass = verdict.is_polygon == expect_polygon;
        c["is_polygon"] = verdict.is_polygon;
        c["vertex_estimate"] = verdict.vertex_estimate;
        c["samples_used"] = verdict.samples_used;
        if (expect_polygon) {
          const int bound = static_cast<int>(body.polytope->vertex_count());
          c["vertex_bound"] = bound;
          pass = pass && verdict.vertex_estimate <= bound;
        }
        c["status"] = pass ? kStatusPass : kStatusFail;
        c["pass"] = pass;
        tally.count(pass);
      } catch (const GeomError& e) {
        record_case_error(e, c, tally);
      }
      cases.push_back(std::move(c));
    }
  }

  rep["cases"] = std::move(cases);
  rep["summary"] = tally.json();
  return rep;
}

// ---------------------------------------------------------------------------
// detect-polygon
// ---------------------------------------------------------------------------

Report run_detect_polygon(const RunConfig& cfg) {
  Report rep = envelope(cfg, "detect-polygon");
  rep["body"] = cfg.body;
  rep["surface"] = cfg.surface;

  const Body body = make_body(cfg.body, cfg.tol);
  const PlaneThroughOrigin plane = plane_from_direction(parse_normal(cfg.plane), cfg.tol);
  rep["plane"] = vec3_json(plane.n);

  std::shared_ptr<PlanarSupportOracle> oracle;
  if (cfg.surface == "projection") {
    if (body.is_polytope()) {
      oracle = polygon_oracle(project_polytope(*body.polytope, plane, cfg.tol));
    } else {
      oracle = projected_oracle(body.oracle, plane);
    }
  } else if (cfg.surface == "section") {
    if (!body.is_polytope()) {
      throw InvalidConfig("detect-polygon: exact sections need a polytope body");
    }
    oracle = polygon_oracle(plane_section(*body.polytope, plane, cfg.tol).polygon);
  } else {
    throw InvalidConfig("detect-polygon: surface must be 'projection' or 'section'");
  }

  Tally tally;
  Report verdict_json;
  try {
    const PolygonVerdict verdict = detect_polygon(*oracle, cfg.tol, cfg.max_samples);
    verdict_json["is_polygon"] = verdict.is_polygon;
    verdict_json["vertex_estimate"] = verdict.vertex_estimate;
    verdict_json["samples_used"] = verdict.samples_used;
    double max_diam = 0.0;
    for (double d : verdict.cluster_diameters) max_diam = std::max(max_diam, d);
    verdict_json["clusters"] = verdict.cluster_diameters.size();
    verdict_json["max_cluster_diameter"] = max_diam;
    tally.pass();

    if (!cfg.svg_dir.empty()) {
      const auto samples =
          support_cluster_samples(*oracle, std::min(verdict.samples_used, 4096), cfg.tol);
      Report pts = Report::array();
      for (const auto& [p, cid] : samples) {
        pts.push_back(Report::array({p.x, p.y, cid}));
      }
      rep["svg_points"] = std::move(pts);
    }
  } catch (const GeomError& e) {
    record_case_error(e, verdict_json, tally);
  }
  rep["verdict"] = std::move(verdict_json);
  rep["summary"] = tally.json();
  return rep;
}

// ---------------------------------------------------------------------------
// mirkil
// ---------------------------------------------------------------------------

Report run_mirkil(const RunConfig& cfg) {
  Report rep = envelope(cfg, "mirkil");
  rep["rays"] = cfg.n_rays;
  Tally tally;

  const std::vector<Vec3> samples = mirkil_cone_sample(cfg.n_rays, derived_seed(cfg.seed, 37));
  int violations = 0;
  for (const Vec3& p : samples) {
    if (!mirkil_membership(p.y, p.z)) violations++;
  }
  Report membership;
  membership["checked"] = samples.size();
  membership["violations"] = violations;
  rep["projection_membership"] = std::move(membership);
  tally.count(violations == 0);

  const bool origin_member = mirkil_membership(0.0, 0.0);
  rep["origin_member"] = origin_member;
  tally.count(origin_member);

  const bool boundary_excluded = !mirkil_membership(5.0, 0.0) && !mirkil_membership(-3.0, 0.0);
  rep["boundary_excluded"] = boundary_excluded;
  tally.count(boundary_excluded);

  // Canonical witness sequences.
  constexpr int kSeqLen = 1000000;
  PointSequence toward_excluded;  // (1, 1/n) -> (1, 0), which is outside
  PointSequence toward_origin;    // (0, 1/n) -> (0, 0), which is inside
  toward_excluded.limit = {1.0, 0.0};
  toward_origin.limit = {0.0, 0.0};
  toward_excluded.points.reserve(kSeqLen);
  toward_origin.points.reserve(kSeqLen);
  for (int n = 1; n <= kSeqLen; ++n) {
    toward_excluded.points.push_back({1.0, 1.0 / static_cast<double>(n)});
    toward_origin.points.push_back({0.0, 1.0 / static_cast<double>(n)});
  }

  const MirkilProjection set;
  const ClosednessReport closedness = closedness_check(
      [&](const Vec2& p) { return set.contains(p); }, {toward_excluded, toward_origin}, cfg.tol);

  Report seqs = Report::array();
  {
    Report s;
    s["description"] = "(1, 1/n), n = 1.." + std::to_string(kSeqLen);
    s["limit"] = vec2_json(toward_excluded.limit);
    bool witnessed = false;
    for (const auto& w : closedness.witnesses) witnessed |= (w.sequence_index == 0);
    s["witness"] = witnessed;
    seqs.push_back(std::move(s));
    tally.count(witnessed);  // the limit (1,0) must be excluded
  }
  {
    Report s;
    s["description"] = "(0, 1/n), n = 1.." + std::to_string(kSeqLen);
    s["limit"] = vec2_json(toward_origin.limit);
    bool witnessed = false;
    for (const auto& w : closedness.witnesses) witnessed |= (w.sequence_index == 1);
    s["witness"] = witnessed;
    seqs.push_back(std::move(s));
    tally.count(!witnessed);  // the origin is a member; no witness here
  }

  Report closed_json;
  closed_json["sequences"] = std::move(seqs);
  closed_json["verdict"] = closedness.not_closed() ? "NOT_CLOSED" : "CONSISTENT_WITH_CLOSED";
  rep["closedness"] = std::move(closed_json);
  tally.count(closedness.not_closed());

  if (!cfg.svg_dir.empty()) {
    Report pts = Report::array();
    const std::size_t keep = std::min<std::size_t>(samples.size(), 2000);
    for (std::size_t i = 0; i < keep; ++i) {
      pts.push_back(vec2_json({samples[i].y, samples[i].z}));
    }
    rep["svg_points"] = std::move(pts);
  }

  rep["summary"] = tally.json();
  return rep;
}

// ---------------------------------------------------------------------------
// proof-suite
// ---------------------------------------------------------------------------

namespace {

Report proof_lemma1(const RunConfig& cfg, Tally& total) {
  Tally tally;
  Report failures = Report::array();
  constexpr int kCases = 500;
  for (int i = 0; i < kCases; ++i) {
    const int n = 8 + (i * 5) % 43;
    const Polytope3 body = random_polytope(n, derived_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(i)), cfg.tol);
    Rng rng(derived_seed(cfg.seed, 2000 + static_cast<std::uint64_t>(i)));
    const std::size_t fi = static_cast<std::size_t>(rng.next_u64() % body.facet_count());

    const double sep = 1e-6 * (1.0 + body.circumradius());
    Vec3 p = facet_point(body, fi, rng);
    Vec3 q = facet_point(body, fi, rng);
    for (int retry = 0; retry < 32 && distance(p, q) <= sep; ++retry) {
      q = facet_point(body, fi, rng);
    }
    const Vec3 x = p + (q - p) * rng.uniform(0.25, 0.75);
    const Vec3 y = facet_point(body, fi, rng);

    try {
      const bool held = lemma1_check(body, p, q, x, y, cfg.tol);
      tally.count(held);
      if (!held) {
        Report f;
        f["case"] = i;
        f["facet"] = fi;
        failures.push_back(std::move(f));
      }
    } catch (const PreconditionViolated& e) {
      tally.skip();
      Report f;
      f["case"] = i;
      f["skipped"] = e.what();
      failures.push_back(std::move(f));
    }
  }
  total.checks += tally.checks;
  total.passed += tally.passed;
  total.failed += tally.failed;
  total.skipped += tally.skipped;

  Report j;
  j["cases"] = kCases;
  j["held"] = tally.passed;
  j["failed"] = tally.failed;
  j["skipped"] = tally.skipped;
  j["failures"] = std::move(failures);
  return j;
}

Report proof_prop2(const RunConfig& cfg, Tally& total) {
  Tally tally;
  Report failures = Report::array();
  double min_epsilon = std::numeric_limits<double>::infinity();
  constexpr int kBodies = 100;
  constexpr int kPairs = 10;
  for (int i = 0; i < kBodies; ++i) {
    const int n = 8 + (i * 7) % 43;
    const Polytope3 body = random_polytope(n, derived_seed(cfg.seed, 3000 + static_cast<std::uint64_t>(i)), cfg.tol);
    Rng rng(derived_seed(cfg.seed, 4000 + static_cast<std::uint64_t>(i)));
    for (int j = 0; j < kPairs; ++j) {
      const std::size_t fi = static_cast<std::size_t>(rng.next_u64() % body.facet_count());
      const double sep = 1e-6 * (1.0 + body.circumradius());
      Vec3 p = facet_point(body, fi, rng);
      Vec3 q = facet_point(body, fi, rng);
      for (int retry = 0; retry < 32 && distance(p, q) <= sep; ++retry) {
        q = facet_point(body, fi, rng);
      }
      try {
        const Prop2Result r = prop2_region_check(body, p, q, cfg.tol);
        const bool ok = r.holds && r.epsilon > 0.0;
        min_epsilon = std::min(min_epsilon, r.epsilon);
        tally.count(ok);
        if (!ok) {
          Report f;
          f["body_case"] = i;
          f["pair"] = j;
          f["epsilon"] = r.epsilon;
          failures.push_back(std::move(f));
        }
      } catch (const GeomError& e) {
        Report f;
        f["body_case"] = i;
        f["pair"] = j;
        record_case_error(e, f, tally);
        failures.push_back(std::move(f));
      }
    }
  }
  total.checks += tally.checks;
  total.passed += tally.passed;
  total.failed += tally.failed;
  total.skipped += tally.skipped;

  Report j;
  j["cases"] = kBodies * kPairs;
  j["held"] = tally.passed;
  j["failed"] = tally.failed;
  j["skipped"] = tally.skipped;
  j["min_epsilon"] = min_epsilon;
  j["failures"] = std::move(failures);
  return j;
}

Report proof_accumulation(const RunConfig& cfg, Tally& total) {
  Tally tally;
  ToleranceCfg acc = cfg.tol;
  acc.cluster_radius = cfg.acc_cluster_radius;

  struct ZooEntry {
    const char* spec;
    bool expect;
  };
  const ZooEntry zoo[] = {
      {"cube", false},          {"simplex", false},        {"dodecahedron", false},
      {"random:24:101", false}, {"random:40:102", false},  {"ball:1", true},
      {"ellipsoid:2:1:1", true}, {"ellipsoid:3:1:0.5", true},
  };

  constexpr int kSamples = 10000;
  Report cases = Report::array();
  int idx = 0;
  for (const ZooEntry& entry : zoo) {
    const Body body = make_body(entry.spec, cfg.tol);
    const AccumulationVerdict verdict = detect_accumulation(
        *body.oracle, kSamples, derived_seed(cfg.seed, 5000 + static_cast<std::uint64_t>(idx++)), acc);
    const bool pass = verdict.accumulating == entry.expect;
    Report c;
    c["body"] = entry.spec;
    c["expect"] = entry.expect;
    c["accumulating"] = verdict.accumulating;
    if (verdict.witness_point) c["witness_point"] = vec3_json(*verdict.witness_point);
    if (verdict.witness_direction) c["witness_direction"] = vec3_json(*verdict.witness_direction);
    c["pass"] = pass;
    cases.push_back(std::move(c));
    tally.count(pass);
  }
  total.checks += tally.checks;
  total.passed += tally.passed;
  total.failed += tally.failed;
  total.skipped += tally.skipped;

  Report j;
  j["samples_per_body"] = kSamples;
  j["cluster_radius"] = acc.cluster_radius;
  j["cases"] = std::move(cases);
  j["held"] = tally.passed;
  j["failed"] = tally.failed;
  return j;
}

Report proof_consistency(const RunConfig& cfg, Tally& total) {
  Tally tally;
  Report failures = Report::array();
  const std::vector<std::string> specs = random_suite_specs(100);
  const std::vector<NamedPlane> planes =
      make_planes({}, 20, derived_seed(cfg.seed, 6000), cfg.tol);

  for (const std::string& spec : specs) {
    const Body body = make_body(spec, cfg.tol);
    const Polytope3 dual = polar_dual(*body.polytope, cfg.tol);
    for (const NamedPlane& np : planes) {
      try {
        const Polygon2 section = plane_section(dual, np.plane, cfg.tol).polygon;
        const Polygon2 dual2d =
            polar_dual_2d(project_polytope(*body.polytope, np.plane, cfg.tol), cfg.tol);
        const PolygonVerdict lhs = detect_polygon(*polygon_oracle(section), cfg.tol, cfg.max_samples);
        const PolygonVerdict rhs = detect_polygon(*polygon_oracle(dual2d), cfg.tol, cfg.max_samples);
        const bool agree =
            lhs.is_polygon == rhs.is_polygon && lhs.vertex_estimate == rhs.vertex_estimate;
        tally.count(agree);
        if (!agree) {
          Report f;
          f["body"] = spec;
          f["plane"] = vec3_json(np.plane.n);
          f["section_verdict"] = lhs.is_polygon;
          f["section_estimate"] = lhs.vertex_estimate;
          f["dual2d_verdict"] = rhs.is_polygon;
          f["dual2d_estimate"] = rhs.vertex_estimate;
          failures.push_back(std::move(f));
        }
      } catch (const GeomError& e) {
        Report f;
        f["body"] = spec;
        f["plane"] = vec3_json(np.plane.n);
        record_case_error(e, f, tally);
        failures.push_back(std::move(f));
      }
    }
  }
  total.checks += tally.checks;
  total.passed += tally.passed;
  total.failed += tally.failed;
  total.skipped += tally.skipped;

  Report j;
  j["cases"] = static_cast<int>(specs.size()) * 20;
  j["agreed"] = tally.passed;
  j["failed"] = tally.failed;
  j["skipped"] = tally.skipped;
  j["failures"] = std::move(failures);
  return j;
}

}  // namespace

Report run_proof_suite(const RunConfig& cfg) {
  Report rep = envelope(cfg, "proof-suite");
  Tally total;
  rep["lemma1"] = proof_lemma1(cfg, total);
  rep["prop2"] = proof_prop2(cfg, total);
  rep["accumulation"] = proof_accumulation(cfg, total);
  rep["consistency"] = proof_consistency(cfg, total);
  rep["summary"] = total.json();
  return rep;
}

Report run_command(const RunConfig& cfg) {
  if (cfg.command == "dual") return run_dual(cfg);
  if (cfg.command == "gen") return run_gen(cfg);
  if (cfg.command == "project") return run_project(cfg);
  if (cfg.command == "section") return run_section(cfg);
  if (cfg.command == "verify-prop1") return run_verify_prop1(cfg);
  if (cfg.command == "klee-forward") return run_klee_forward(cfg);
  if (cfg.command == "detect-polygon") return run_detect_polygon(cfg);
  if (cfg.command == "mirkil") return run_mirkil(cfg);
  if (cfg.command == "proof-suite") return run_proof_suite(cfg);
  throw InvalidConfig("unknown command: " + cfg.command);
}

int exit_code_for(const Report& report) {
  if (!report.contains("summary")) return 2;
  return report["summary"].value("failed", 1) == 0 ? 0 : 1;
}

void write_report_file(const Report& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << report.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// SVG emission: rendering depends only on report contents.
// ---------------------------------------------------------------------------

namespace {

std::vector<Vec2> json_points(const Report& arr) {
  std::vector<Vec2> pts;
  for (const auto& p : arr) pts.push_back({p[0].get<double>(), p[1].get<double>()});
  return pts;
}

void fit_box(const std::vector<Vec2>& pts, Vec2& lo, Vec2& hi) {
  for (const Vec2& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
}

void render_prop1_overlays(const Report& report, const std::string& dir) {
  int index = 0;
  for (const auto& c : report["cases"]) {
    const int case_index = index++;
    if (!c.contains("lhs_polygon")) continue;
    const std::vector<Vec2> lhs = json_points(c["lhs_polygon"]);
    const std::vector<Vec2> rhs = json_points(c["rhs_polygon"]);
    Vec2 lo{1e300, 1e300}, hi{-1e300, -1e300};
    fit_box(lhs, lo, hi);
    fit_box(rhs, lo, hi);

    SvgWriter svg(520, 520);
    svg.set_world_box(lo, hi);
    svg.add_polygon(lhs, "#1f77b4", "#1f77b4", 2.0, 0.10);
    svg.add_polygon(rhs, "#d62728", "none", 1.2, 0.0);
    svg.add_label(10, 18, "section of dual (filled) vs dual of projection (outline)");
    svg.add_label(10, 34, c["body"].get<std::string>() +
                              "  hausdorff=" + std::to_string(c["hausdorff"].get<double>()));
    svg.write_file(dir + "/prop1_case_" + std::to_string(case_index) + ".svg");
  }
}

void render_mirkil(const Report& report, const std::string& dir) {
  if (!report.contains("svg_points")) return;
  const std::vector<Vec2> pts = json_points(report["svg_points"]);
  Vec2 lo{-0.5, -0.5}, hi{0.5, 0.5};
  fit_box(pts, lo, hi);

  SvgWriter svg(640, 520);
  svg.set_world_box(lo, hi);
  // Excluded boundary: the line b = 0 except the origin.
  svg.add_polyline({{lo.x, 0.0}, {hi.x, 0.0}}, "#d62728", 1.5, true);
  for (const Vec2& p : pts) svg.add_circle(p, 1.2, "#1f77b4");
  svg.add_circle({0.0, 0.0}, 4.0, "#2ca02c");  // the included origin
  svg.add_label(10, 18, "projected cone samples; dashed line excluded, origin included");
  svg.add_label(10, 34, std::string("verdict: ") +
                            report["closedness"]["verdict"].get<std::string>());
  svg.write_file(dir + "/mirkil.svg");
}

void render_detector(const Report& report, const std::string& dir) {
  if (!report.contains("svg_points")) return;
  static const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::vector<Vec2> pts;
  std::vector<int> ids;
  for (const auto& entry : report["svg_points"]) {
    pts.push_back({entry[0].get<double>(), entry[1].get<double>()});
    ids.push_back(entry[2].get<int>());
  }
  Vec2 lo{1e300, 1e300}, hi{-1e300, -1e300};
  fit_box(pts, lo, hi);

  SvgWriter svg(520, 520);
  svg.set_world_box(lo, hi);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    svg.add_circle(pts[i], 1.6, kPalette[static_cast<std::size_t>(ids[i]) % 10]);
  }
  const auto& verdict = report["verdict"];
  std::string line = "is_polygon=";
  line += verdict.value("is_polygon", false) ? "true" : "false";
  line += "  estimate=" + std::to_string(verdict.value("vertex_estimate", 0));
  svg.add_label(10, 18, "support samples colored by cluster");
  svg.add_label(10, 34, line);
  svg.write_file(dir + "/detect_polygon.svg");
}

}  // namespace

void emit_svgs(const Report& report, const std::string& svg_dir) {
  if (svg_dir.empty()) return;
  std::filesystem::create_directories(svg_dir);
  const std::string command = report.value("command", "");
  if (command == "verify-prop1") render_prop1_overlays(report, svg_dir);
  if (command == "mirkil") render_mirkil(report, svg_dir);
  if (command == "detect-polygon") render_detector(report, svg_dir);
}

}  // namespace kleekit
