#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kleekit/bodies.hpp"
#include "kleekit/plane.hpp"
#include "kleekit/polytope.hpp"
#include "kleekit/tolerance.hpp"

namespace kleekit {

// Key order is part of the report contract: reports with the same content
// must be byte-identical.
using Report = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

// One parsed run request. Every report embeds seed, tolerances, and the
// body/plane specs, so a run can be reproduced from its own output.
struct RunConfig {
  std::string command;
  std::vector<std::string> bodies;
  std::vector<std::string> plane_normals;  // explicit "x,y,z" specs
  int random_planes = 20;
  std::uint64_t seed = 0;
  ToleranceCfg tol;
  std::string out_path;
  std::string svg_dir;

  std::string body;                     // single-body commands
  std::string plane = "0,0,1";          // single-plane commands
  int n_rays = 100000;                  // mirkil sample count
  int n_points = 30;                    // gen: points on the sphere
  int max_samples = 65536;              // polygon detector budget
  std::string surface = "projection";   // detect-polygon: projection|section
  double acc_cluster_radius = 0.6;      // neighborhood scale for accumulation
};

// Tolerance overrides arriving from the CLI/config must sit in (0, 1e-2].
void validate_tolerance_override(double value, const std::string& flag);

// A zoo inhabitant: polytopes carry both the polytope and its oracle,
// smooth bodies only the oracle.
struct Body {
  std::string spec;
  std::optional<Polytope3> polytope;
  std::shared_ptr<SupportOracle> oracle;
  bool is_polytope() const { return polytope.has_value(); }
};

// Accepts zoo names (cube, simplex, octahedron, dodecahedron, random:N:SEED,
// ellipsoid:a:b:c, ball:r) or a path to an OFF file.
Body make_body(const std::string& spec, const ToleranceCfg& cfg);

// Deterministic seed derivation for independent sub-streams.
std::uint64_t derived_seed(std::uint64_t base, std::uint64_t salt);

struct NamedPlane {
  std::string spec;
  PlaneThroughOrigin plane;
};

// Explicit normals if given, otherwise `count` seeded random origin-planes.
std::vector<NamedPlane> make_planes(const std::vector<std::string>& explicit_normals, int count,
                                    std::uint64_t seed, const ToleranceCfg& cfg);

// The standard 100-body random suite (8..50 sphere points, seeds derived
// from `base_seed`) shared by the verification sweeps.
std::vector<std::string> random_suite_specs(int n_bodies = 100);

// Command runners. Each returns a complete report; file outputs (OFF,
// polygon JSON) happen inside where the command is about producing a file.
Report run_dual(const RunConfig& cfg);
Report run_gen(const RunConfig& cfg);
Report run_project(const RunConfig& cfg);
Report run_section(const RunConfig& cfg);
Report run_verify_prop1(const RunConfig& cfg);
Report run_klee_forward(const RunConfig& cfg);
Report run_detect_polygon(const RunConfig& cfg);
Report run_mirkil(const RunConfig& cfg);
Report run_proof_suite(const RunConfig& cfg);

Report run_command(const RunConfig& cfg);

// 0 iff the report's summary counts zero failures.
int exit_code_for(const Report& report);

void write_report_file(const Report& report, const std::string& path);

// Re-renderable plots: SVG is a pure function of report contents.
void emit_svgs(const Report& report, const std::string& svg_dir);

}  // namespace kleekit
