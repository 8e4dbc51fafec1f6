// kleekit — convex-geometry verification harness CLI.
//
// Subcommands: dual, project, section, verify-prop1, klee-forward,
// detect-polygon, mirkil, proof-suite, gen. Reports are schema-versioned
// JSON; every report embeds the seed, tolerances, and body/plane specs
// needed to reproduce the run. Exit code 0 iff no check failed.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kleekit/errors.hpp"
#include "kleekit/harness.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("KLEEKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring non-numeric KLEEKIT_SEED='" << env << "'\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  kleekit::RunConfig cfg;
  cfg.seed = default_seed();

  CLI::App app{"kleekit: polar duality, projections, sections, and the polygon/"
               "polyhedron verification harness"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file (CLI flags win)");
  app.fallthrough();

  double tol_override = 0.0;
  double cluster_override = 0.0;
  app.add_option("--seed", cfg.seed, "random seed (default: $KLEEKIT_SEED or 0)");
  app.add_option("--tol", tol_override, "override eps_geom, in (0, 1e-2]");
  app.add_option("--cluster-radius", cluster_override,
                 "override detector cluster radius, in (0, 1e-2]");
  app.add_option("--out", cfg.out_path, "output file (report JSON / OFF / polygon JSON)");
  app.add_option("--svg-dir", cfg.svg_dir, "directory for SVG plots");

  std::string planes_spec;
  auto add_planes_opt = [&](CLI::App* cmd) {
    cmd->add_option("--planes", planes_spec,
                    "plane count (random) or semicolon-separated normals 'x,y,z;...'");
  };
  std::string bodies_spec;
  auto add_bodies_opt = [&](CLI::App* cmd, const char* fallback) {
    cmd->add_option("--bodies", bodies_spec,
                    std::string("comma-separated body specs (default: ") + fallback + ")");
  };

  CLI::App* dual = app.add_subcommand("dual", "write the polar dual of a body as OFF");
  dual->add_option("--body", cfg.body, "zoo name or OFF path")->required();

  CLI::App* gen = app.add_subcommand("gen", "random polytope (unit-sphere points) to OFF");
  gen->add_option("--n", cfg.n_points, "number of sphere points (>= 8)");

  CLI::App* project = app.add_subcommand("project", "orthogonal projection into a plane");
  project->add_option("--body", cfg.body)->required();
  project->add_option("--normal", cfg.plane, "plane normal 'x,y,z'");

  CLI::App* section = app.add_subcommand("section", "plane section through the origin");
  section->add_option("--body", cfg.body)->required();
  section->add_option("--normal", cfg.plane, "plane normal 'x,y,z'");

  CLI::App* prop1 = app.add_subcommand("verify-prop1",
                                       "check section-of-dual == dual-of-projection");
  add_bodies_opt(prop1, "cube");
  add_planes_opt(prop1);

  CLI::App* forward = app.add_subcommand("klee-forward",
                                         "polygon verdicts for projections of the zoo");
  add_bodies_opt(forward, "cube,ball:1");
  add_planes_opt(forward);
  cfg.random_planes = 20;

  CLI::App* detect = app.add_subcommand("detect-polygon", "polygon detector on one surface");
  detect->add_option("--body", cfg.body)->required();
  detect->add_option("--normal", cfg.plane, "plane normal 'x,y,z'");
  detect->add_option("--surface", cfg.surface, "projection | section");
  detect->add_option("--max-samples", cfg.max_samples, "detector sampling budget");

  CLI::App* mirkil = app.add_subcommand("mirkil",
                                        "cone sampling plus the non-closed projection witness");
  mirkil->add_option("--rays", cfg.n_rays, "number of cone samples");

  CLI::App* proof = app.add_subcommand("proof-suite",
                                       "lemma/proposition random suites, accumulation "
                                       "dichotomy, consistency triangle");
  proof->add_option("--acc-radius", cfg.acc_cluster_radius,
                    "accumulation neighborhood radius");

  CLI11_PARSE(app, argc, argv);

  try {
    // Overrides are bounds-checked here; whether the combination is usable is
    // judged where it is consumed, so a bad mix fails inside the report
    // instead of aborting the run.
    if (tol_override != 0.0) {
      kleekit::validate_tolerance_override(tol_override, "--tol");
      cfg.tol.eps_geom = tol_override;
    }
    if (cluster_override != 0.0) {
      kleekit::validate_tolerance_override(cluster_override, "--cluster-radius");
      cfg.tol.cluster_radius = cluster_override;
    }

    if (!planes_spec.empty()) {
      if (planes_spec.find(',') == std::string::npos) {
        cfg.random_planes = static_cast<int>(std::stol(planes_spec));
      } else {
        std::string entry;
        std::istringstream ss(planes_spec);
        while (std::getline(ss, entry, ';')) {
          if (!entry.empty()) cfg.plane_normals.push_back(entry);
        }
      }
    }
    if (!bodies_spec.empty()) {
      std::string entry;
      std::istringstream ss(bodies_spec);
      while (std::getline(ss, entry, ',')) {
        if (!entry.empty()) cfg.bodies.push_back(entry);
      }
    }

    for (CLI::App* sub : {dual, gen, project, section, prop1, forward, detect, mirkil, proof}) {
      if (sub->parsed()) cfg.command = sub->get_name();
    }
    if (forward->parsed() && planes_spec.empty()) cfg.random_planes = 100;

    const kleekit::Report report = kleekit::run_command(cfg);

    const bool report_to_file = !cfg.out_path.empty() && cfg.command != "dual" &&
                                cfg.command != "gen" && cfg.command != "project" &&
                                cfg.command != "section";
    if (report_to_file) {
      kleekit::write_report_file(report, cfg.out_path);
      std::cout << report["summary"].dump() << '\n';
    } else {
      std::cout << report.dump(2) << '\n';
    }
    kleekit::emit_svgs(report, cfg.svg_dir);
    return kleekit::exit_code_for(report);
  } catch (const kleekit::GeomError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
