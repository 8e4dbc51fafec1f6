#pragma once

#include "kleekit/errors.hpp"

namespace kleekit {

// Numerical policy threaded explicitly through every operation; no globals.
//
// eps_geom           absolute geometric tolerance (memberships, coplanarity)
// eps_rel            relative tolerance (unit lengths, support identities)
// cluster_radius     point-clustering radius used by the detectors
// threshold_fraction fraction of samples a single cluster must capture before
//                    it counts as an accumulation
struct ToleranceCfg {
  double eps_geom = 1e-9;
  double eps_rel = 1e-9;
  double cluster_radius = 1e-3;
  double threshold_fraction = 0.05;

  void validate() const {
    if (!(eps_geom > 0.0) || !(eps_rel > 0.0) || !(cluster_radius > 0.0) ||
        !(threshold_fraction > 0.0)) {
      throw InvalidConfig("tolerances must be strictly positive");
    }
    if (eps_geom > cluster_radius) {
      throw InvalidConfig("eps_geom must not exceed cluster_radius");
    }
  }

  static ToleranceCfg defaults() { return ToleranceCfg{}; }

  // Neighborhood-scale clustering for the extreme-point accumulation check.
  // Accumulation happens at the scale of a neighborhood of the body, not at
  // the fine scale used to tell polygon vertices apart.
  static ToleranceCfg accumulation_defaults() {
    ToleranceCfg cfg;
    cfg.cluster_radius = 0.6;
    return cfg;
  }

  // Membership checks scale the absolute tolerance with the point magnitude;
  // polar duals of thin bodies have legitimately large coordinates.
  double scaled_eps(double magnitude) const { return eps_geom * (1.0 + magnitude); }
};

}  // namespace kleekit
