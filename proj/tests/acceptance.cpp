// Acceptance suite: one line per criterion, exit 0 iff everything passes.
// Thresholds are pinned in code; nothing here is calibrated after the fact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kleekit/analysis.hpp"
#include "kleekit/bodies.hpp"
#include "kleekit/duality.hpp"
#include "kleekit/harness.hpp"
#include "kleekit/polygon.hpp"

using namespace kleekit;

namespace {

struct Criterion {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void run(int number, const std::string& title, const std::function<Criterion()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Criterion result;
  try {
    result = fn();
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] criterion %d: %-34s %s (%.2fs)\n", result.pass ? "PASS" : "FAIL", number,
              title.c_str(), result.detail.c_str(), secs);
  std::fflush(stdout);
  if (!result.pass) g_failures++;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

int main() {
  const ToleranceCfg tol;

  // Shared setup: the 100-body random suite and one proof-suite report.
  const std::vector<std::string> suite = random_suite_specs(100);

  RunConfig proof_cfg;
  proof_cfg.command = "proof-suite";
  proof_cfg.seed = 0;
  Report proof = run_proof_suite(proof_cfg);

  run(1, "Proposition 1, exact path", [&] {
    const auto start = std::chrono::steady_clock::now();
    RunConfig cfg;
    cfg.command = "verify-prop1";
    cfg.bodies = suite;
    cfg.random_planes = 20;
    cfg.seed = 0;
    const Report rep = run_verify_prop1(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Criterion c;
    c.pass = rep["summary"]["checks"] == 2000 && rep["summary"]["failed"] == 0 &&
             rep["summary"]["skipped"] == 0 && secs < 30.0;
    c.detail = "2000 cases, max hausdorff " + fmt(rep["max_hausdorff"].get<double>());
    return c;
  });

  run(2, "Proposition 1, oracle path", [&] {
    const auto start = std::chrono::steady_clock::now();
    RunConfig cfg;
    cfg.command = "verify-prop1";
    cfg.bodies = {"ball:1", "ellipsoid:2:1:1", "ellipsoid:3:1:0.5"};
    cfg.random_planes = 20;
    cfg.seed = 0;
    const Report rep = run_verify_prop1(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double max_rel = rep["max_rel_discrepancy"].get<double>();
    Criterion c;
    c.pass = rep["summary"]["failed"] == 0 && rep["summary"]["checks"] == 60 &&
             max_rel < 1e-10 && secs < 5.0;
    c.detail = "60 sweeps x 360 dirs, max rel " + fmt(max_rel);
    return c;
  });

  run(3, "duality involution", [&] {
    Criterion c;
    c.pass = true;
    double worst = 0.0;
    for (const std::string& spec : suite) {
      const Body body = make_body(spec, tol);
      const Polytope3 twice = polar_dual(polar_dual(*body.polytope, tol), tol);
      const double h = hausdorff_point_sets(twice.vertices, body.polytope->vertices);
      worst = std::max(worst, h);
      if (h > 1e-9) c.pass = false;
    }
    const Polytope3 cube = make_cube(1.0, tol);
    const Polytope3 octa = polar_dual(cube, tol);
    c.pass = c.pass && cube.vertex_count() == 8 && cube.facet_count() == 6 &&
             octa.vertex_count() == 6 && octa.facet_count() == 8 &&
             polar_dual(octa, tol).vertex_count() == 8 &&
             polar_dual(octa, tol).facet_count() == 6;
    c.detail = "100 bodies, worst vertex-set hausdorff " + fmt(worst);
    return c;
  });

  run(4, "Theorem 3 forward detection", [&] {
    const auto start = std::chrono::steady_clock::now();
    RunConfig cfg;
    cfg.command = "klee-forward";
    cfg.bodies = {"cube", "simplex", "dodecahedron", "random:30:7", "random:50:11",
                  "ball:1", "ellipsoid:2:1:1", "ellipsoid:3:1:0.5"};
    cfg.random_planes = 100;
    cfg.seed = 0;
    const Report rep = run_klee_forward(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Criterion c;
    c.pass = rep["summary"]["checks"] == 800 && rep["summary"]["failed"] == 0 &&
             rep["summary"]["skipped"] == 0 && secs < 60.0;
    c.detail = "800 projections, 0 misclassified";
    return c;
  });

  run(5, "Lemma 1 random suite", [&] {
    const auto& l = proof["lemma1"];
    Criterion c;
    c.pass = l["cases"] == 500 && l["failed"] == 0;
    c.detail = std::to_string(l["held"].get<int>()) + "/500 held, " +
               std::to_string(l["skipped"].get<int>()) + " skipped";
    return c;
  });

  run(6, "Proposition 2 random suite", [&] {
    const auto& p = proof["prop2"];
    Criterion c;
    c.pass = p["cases"] == 1000 && p["failed"] == 0 && p["min_epsilon"].get<double>() > 0.0;
    c.detail = "1000 pairs, min epsilon " + fmt(p["min_epsilon"].get<double>());
    return c;
  });

  run(7, "Mirkil Example 1", [&] {
    const auto start = std::chrono::steady_clock::now();
    RunConfig cfg;
    cfg.command = "mirkil";
    cfg.n_rays = 100000;
    cfg.seed = 0;
    const Report rep = run_mirkil(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Criterion c;
    c.pass = rep["projection_membership"]["violations"] == 0 &&
             rep["projection_membership"]["checked"] == 100000 &&
             rep["origin_member"] == true &&
             rep["closedness"]["verdict"] == "NOT_CLOSED" &&
             rep["closedness"]["sequences"][0]["witness"] == true && secs < 5.0;
    c.detail = "NOT_CLOSED with limit (1,0) excluded, origin included";
    return c;
  });

  run(8, "Theorem 4 consistency triangle", [&] {
    const auto& t = proof["consistency"];
    Criterion c;
    c.pass = t["cases"] == 2000 && t["failed"] == 0;
    c.detail = std::to_string(t["agreed"].get<int>()) + "/2000 verdicts agree";
    return c;
  });

  run(9, "proof-suite determinism", [&] {
    const Report again = run_proof_suite(proof_cfg);
    Criterion c;
    c.pass = proof.dump() == again.dump() && proof["summary"]["failed"] == 0;
    c.detail = "byte-identical JSON across repeated runs";
    return c;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
