#include "kleekit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "kleekit/errors.hpp"
#include "kleekit/rng.hpp"

namespace kleekit {

namespace {

// Sparse grid over 2D/3D points with cell size = radius, so near-neighbor
// queries only touch adjacent cells.
std::int64_t cell_hash(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t v : {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b),
                          static_cast<std::uint64_t>(c)}) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::int64_t>(h);
}

struct Cluster {
  Vec2 seed;
  Vec2 lo, hi;  // bounding box
  int size = 0;
};

// One support-sampling pass at `samples` uniformly spread directions,
// greedily clustered with radius rho. Returns per-cluster bbox diagonals plus
// the number of distinct support points (pairwise farther than eps apart) and
// optionally captures (point, cluster id) pairs.
struct LevelStats {
  std::vector<double> diameters;
  std::size_t distinct_points = 0;
};

LevelStats detail_cluster_level(const PlanarSupportOracle& body, int samples, double rho,
                                double eps, std::vector<std::pair<Vec2, int>>* capture) {
  std::vector<Cluster> clusters;
  std::unordered_map<std::int64_t, std::vector<int>> grid;
  auto cell_of = [&](const Vec2& p) {
    return std::make_pair(static_cast<std::int64_t>(std::floor(p.x / rho)),
                          static_cast<std::int64_t>(std::floor(p.y / rho)));
  };
  std::vector<Vec2> distinct;
  std::unordered_map<std::int64_t, std::vector<int>> fine_grid;
  auto fine_cell = [&](const Vec2& p, std::int64_t dx, std::int64_t dy) {
    return cell_hash(static_cast<std::int64_t>(std::floor(p.x / eps)) + dx,
                     static_cast<std::int64_t>(std::floor(p.y / eps)) + dy, 1);
  };

  for (int j = 0; j < samples; ++j) {
    // Nested grid: level M's directions recur at level 2M, so the set of hit
    // polygon vertices only grows and cluster counts are monotone in M.
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / samples;
    const Vec2 p = body.eval({std::cos(phi), std::sin(phi)}).point;

    const auto [cx, cy] = cell_of(p);
    int found = -1;
    for (std::int64_t dx = -1; dx <= 1 && found < 0; ++dx) {
      for (std::int64_t dy = -1; dy <= 1 && found < 0; ++dy) {
        auto it = grid.find(cell_hash(cx + dx, cy + dy, 0));
        if (it == grid.end()) continue;
        for (int ci : it->second) {
          if (distance(p, clusters[static_cast<std::size_t>(ci)].seed) <= rho) {
            found = ci;
            break;
          }
        }
      }
    }
    if (found >= 0) {
      Cluster& c = clusters[static_cast<std::size_t>(found)];
      c.lo = {std::min(c.lo.x, p.x), std::min(c.lo.y, p.y)};
      c.hi = {std::max(c.hi.x, p.x), std::max(c.hi.y, p.y)};
      c.size++;
    } else {
      clusters.push_back(Cluster{p, p, p, 1});
      grid[cell_hash(cx, cy, 0)].push_back(static_cast<int>(clusters.size()) - 1);
      found = static_cast<int>(clusters.size()) - 1;
    }
    if (capture) capture->emplace_back(p, found);

    bool dup = false;
    for (std::int64_t dx = -1; dx <= 1 && !dup; ++dx) {
      for (std::int64_t dy = -1; dy <= 1 && !dup; ++dy) {
        auto it = fine_grid.find(fine_cell(p, dx, dy));
        if (it == fine_grid.end()) continue;
        for (int qi : it->second) {
          if (distance(p, distinct[static_cast<std::size_t>(qi)]) <= eps) {
            dup = true;
            break;
          }
        }
      }
    }
    if (!dup) {
      distinct.push_back(p);
      fine_grid[fine_cell(p, 0, 0)].push_back(static_cast<int>(distinct.size()) - 1);
    }
  }

  LevelStats stats;
  stats.distinct_points = distinct.size();
  stats.diameters.reserve(clusters.size());
  for (const Cluster& c : clusters) stats.diameters.push_back((c.hi - c.lo).norm());
  return stats;
}

}  // namespace

PolygonVerdict detect_polygon(const PlanarSupportOracle& body, const ToleranceCfg& cfg,
                              int max_samples) {
  cfg.validate();
  if (max_samples < 64) throw InvalidConfig("detect_polygon: max_samples < 64");

  // Interior precheck: width must be positive in every direction.
  for (int k = 0; k < 64; ++k) {
    const double phi = std::numbers::pi * static_cast<double>(k) / 64.0;
    const Vec2 u{std::cos(phi), std::sin(phi)};
    if (body.eval(u).value + body.eval(-u).value <= cfg.eps_geom) {
      throw FlatBody("detect_polygon: body width below eps_geom");
    }
  }

  PolygonVerdict verdict;
  const double rho = cfg.cluster_radius;
  std::vector<std::size_t> counts;
  std::vector<std::size_t> distinct_counts;
  for (int samples = 64; samples <= max_samples; samples *= 2) {
    const LevelStats level = detail_cluster_level(body, samples, rho, cfg.eps_geom, nullptr);
    counts.push_back(level.diameters.size());
    distinct_counts.push_back(level.distinct_points);
    verdict.samples_used = samples;
    verdict.cluster_diameters = level.diameters;

    const std::size_t n = counts.size();
    const bool stable = n >= 3 && counts[n - 1] == counts[n - 2] && counts[n - 2] == counts[n - 3];
    // A polygon's distinct support-point set is finite and settles; a smooth
    // curve keeps producing new points at every doubling, even once the
    // greedy cluster count saturates.
    const bool settled = n >= 3 && distinct_counts[n - 1] == distinct_counts[n - 2] &&
                         distinct_counts[n - 2] == distinct_counts[n - 3];
    const bool tight = std::all_of(level.diameters.begin(), level.diameters.end(),
                                   [&](double d) { return d < rho; });
    if (stable && settled && tight && level.diameters.size() >= 3) {
      verdict.is_polygon = true;
      verdict.vertex_estimate = static_cast<int>(level.diameters.size());
      return verdict;
    }
  }
  verdict.is_polygon = false;
  verdict.vertex_estimate = 0;
  return verdict;
}

std::vector<std::pair<Vec2, int>> support_cluster_samples(const PlanarSupportOracle& body,
                                                          int samples, const ToleranceCfg& cfg) {
  cfg.validate();
  std::vector<std::pair<Vec2, int>> out;
  out.reserve(static_cast<std::size_t>(samples));
  detail_cluster_level(body, samples, cfg.cluster_radius, cfg.eps_geom, &out);
  return out;
}

std::vector<Vec3> extreme_points(const Polytope3& body, const ToleranceCfg& cfg) {
  body.validate(cfg);
  const std::vector<Vec3>& verts = body.vertices;
  std::vector<Vec3> out;
  out.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Vec3& x = verts[i];
    bool midpoint = false;
    for (std::size_t a = 0; a < verts.size() && !midpoint; ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        if (b == i) continue;
        if (distance((verts[a] + verts[b]) * 0.5, x) <= cfg.scaled_eps(x.norm())) {
          midpoint = true;
          break;
        }
      }
    }
    if (!midpoint) out.push_back(x);
  }
  return out;
}

AccumulationVerdict detect_accumulation(const SupportOracle& body, int n_samples,
                                        std::uint64_t seed, const ToleranceCfg& cfg) {
  cfg.validate();
  if (n_samples < 1) throw InvalidConfig("detect_accumulation: n_samples < 1");

  Rng rng(seed);
  std::vector<Vec3> samples;
  samples.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) samples.push_back(body.eval(rng.unit_vector()).point);

  // Distinct support points: pairwise farther than eps_geom apart.
  const double eps = cfg.eps_geom;
  std::vector<Vec3> distinct;
  {
    std::unordered_map<std::int64_t, std::vector<int>> grid;
    auto cell = [&](const Vec3& p, std::int64_t d0, std::int64_t d1, std::int64_t d2) {
      return cell_hash(static_cast<std::int64_t>(std::floor(p.x / eps)) + d0,
                       static_cast<std::int64_t>(std::floor(p.y / eps)) + d1,
                       static_cast<std::int64_t>(std::floor(p.z / eps)) + d2);
    };
    for (const Vec3& p : samples) {
      bool dup = false;
      for (std::int64_t dx = -1; dx <= 1 && !dup; ++dx) {
        for (std::int64_t dy = -1; dy <= 1 && !dup; ++dy) {
          for (std::int64_t dz = -1; dz <= 1 && !dup; ++dz) {
            auto it = grid.find(cell(p, dx, dy, dz));
            if (it == grid.end()) continue;
            for (int qi : it->second) {
              if (distance(p, distinct[static_cast<std::size_t>(qi)]) <= eps) {
                dup = true;
                break;
              }
            }
          }
        }
      }
      if (!dup) {
        distinct.push_back(p);
        grid[cell(p, 0, 0, 0)].push_back(static_cast<int>(distinct.size()) - 1);
      }
    }
  }

  // Densest ball of radius cluster_radius centered at a sampled point.
  const double rho = cfg.cluster_radius;
  std::vector<std::vector<int>> buckets;
  std::unordered_map<std::int64_t, int> bucket_of;
  auto coarse = [&](const Vec3& p, std::int64_t d0, std::int64_t d1, std::int64_t d2) {
    return cell_hash(static_cast<std::int64_t>(std::floor(p.x / rho)) + d0,
                     static_cast<std::int64_t>(std::floor(p.y / rho)) + d1,
                     static_cast<std::int64_t>(std::floor(p.z / rho)) + d2);
  };
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    const std::int64_t key = coarse(distinct[i], 0, 0, 0);
    auto it = bucket_of.find(key);
    if (it == bucket_of.end()) {
      bucket_of.emplace(key, static_cast<int>(buckets.size()));
      buckets.push_back({static_cast<int>(i)});
    } else {
      buckets[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    }
  }

  int best_count = -1;
  int best_center = -1;
  std::vector<int> best_members;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    std::vector<int> members;
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          auto it = bucket_of.find(coarse(distinct[i], dx, dy, dz));
          if (it == bucket_of.end()) continue;
          for (int qi : buckets[static_cast<std::size_t>(it->second)]) {
            if (distance(distinct[i], distinct[static_cast<std::size_t>(qi)]) <= rho) {
              members.push_back(qi);
            }
          }
        }
      }
    }
    if (static_cast<int>(members.size()) > best_count) {
      best_count = static_cast<int>(members.size());
      best_center = static_cast<int>(i);
      best_members = std::move(members);
    }
  }

  AccumulationVerdict verdict;
  if (best_center < 0) return verdict;
  const double threshold = static_cast<double>(n_samples) * cfg.threshold_fraction;
  verdict.accumulating = static_cast<double>(best_count) > threshold;
  if (verdict.accumulating) {
    const Vec3 p = distinct[static_cast<std::size_t>(best_center)];
    Vec3 mean{};
    for (int qi : best_members) {
      const Vec3 q = distinct[static_cast<std::size_t>(qi)];
      const double d = distance(q, p);
      if (d > eps) mean = mean + (q - p) / d;
    }
    verdict.witness_point = p;
    if (mean.norm() > 1e-12) {
      verdict.witness_direction = mean.normalized();
    } else if (!best_members.empty()) {
      // Perfectly balanced cluster; any member direction witnesses approach.
      for (int qi : best_members) {
        const Vec3 q = distinct[static_cast<std::size_t>(qi)];
        if (distance(q, p) > eps) {
          verdict.witness_direction = (q - p).normalized();
          break;
        }
      }
    }
    if (!verdict.witness_direction) verdict.witness_direction = Vec3{1.0, 0.0, 0.0};
  }
  return verdict;
}

bool lemma1_check(const Polytope3& body, const Vec3& p, const Vec3& q, const Vec3& x,
                  const Vec3& y, const ToleranceCfg& cfg) {
  body.validate(cfg);

  for (const Vec3* pt : {&p, &q, &x, &y}) {
    if (!body.contains(*pt, cfg)) {
      throw PreconditionViolated(PreconditionViolated::Which::PointsNotInBody,
                                 "lemma1_check: a named point lies outside the body");
    }
  }

  // x strictly between p and q.
  const Vec3 pq = q - p;
  const double pq_len = pq.norm();
  const double scale_eps = cfg.scaled_eps(std::max(p.norm(), q.norm()));
  bool between = pq_len > scale_eps;
  if (between) {
    const double t = (x - p).dot(pq) / (pq_len * pq_len);
    const Vec3 foot = p + pq * t;
    between = distance(x, foot) <= scale_eps && t * pq_len > scale_eps &&
              (1.0 - t) * pq_len > scale_eps;
  }
  if (!between) {
    throw PreconditionViolated(PreconditionViolated::Which::XNotBetween,
                               "lemma1_check: x is not in the relative interior of [pq]");
  }

  // [xy] on the boundary, probed at 64 points.
  for (int i = 0; i < 64; ++i) {
    const double t = static_cast<double>(i) / 63.0;
    if (!body.on_boundary(x + (y - x) * t, cfg)) {
      throw PreconditionViolated(PreconditionViolated::Which::SegmentLeavesBoundary,
                                 "lemma1_check: [xy] leaves the boundary");
    }
  }

  // Conclusion: triangular grid over pqy, 20 subdivisions, 231 probes.
  constexpr int kSub = 20;
  for (int i = 0; i <= kSub; ++i) {
    for (int j = 0; j <= kSub - i; ++j) {
      const int k = kSub - i - j;
      const Vec3 point = (p * static_cast<double>(i) + q * static_cast<double>(j) +
                          y * static_cast<double>(k)) /
                         static_cast<double>(kSub);
      if (!body.on_boundary(point, cfg)) return false;
    }
  }
  return true;
}

Prop2Result prop2_region_check(const Polytope3& body, const Vec3& p, const Vec3& q,
                               const ToleranceCfg& cfg) {
  const double scale_eps = cfg.scaled_eps(std::max(p.norm(), q.norm()));
  if (distance(p, q) <= scale_eps) throw DegeneratePair("prop2_region_check: p == q");
  if (!body.contains(p, cfg) || !body.contains(q, cfg)) {
    throw PreconditionViolated(PreconditionViolated::Which::PointsNotInBody,
                               "prop2_region_check: p or q lies outside the body");
  }

  const std::vector<Vec3> extremes = extreme_points(body, cfg);
  auto angle_rpq = [&](const Vec3& r) {
    const Vec3 a = r - p;
    const Vec3 b = q - p;
    const double c = std::clamp(a.dot(b) / (a.norm() * b.norm()), -1.0, 1.0);
    return std::acos(c);
  };

  double bound = std::numbers::pi / 4.0;
  for (const Vec3& r : extremes) {
    const double dist = distance(r, p);
    if (dist <= scale_eps) continue;  // r == p
    bound = std::min(bound, std::max(dist, angle_rpq(r)));
  }
  const double epsilon = bound;

  bool holds = epsilon > 0.0;
  for (const Vec3& r : extremes) {
    const double dist = distance(r, p);
    if (dist <= scale_eps) continue;
    if (dist < epsilon && angle_rpq(r) < epsilon) {
      holds = false;
      break;
    }
  }
  return {epsilon, holds};
}

ClosednessReport closedness_check(const std::function<bool(const Vec2&)>& membership,
                                  const std::vector<PointSequence>& sequences,
                                  const ToleranceCfg& cfg) {
  ClosednessReport report;
  for (std::size_t si = 0; si < sequences.size(); ++si) {
    const PointSequence& seq = sequences[si];
    if (seq.points.size() < 3) {
      throw NonConvergentSequence("closedness_check: sequence too short to assess decay");
    }
    for (std::size_t k = 2; k < seq.points.size(); ++k) {
      const double prev = distance(seq.points[k - 1], seq.points[k - 2]);
      const double cur = distance(seq.points[k], seq.points[k - 1]);
      if (cur > prev * (1.0 + cfg.eps_rel)) {
        throw NonConvergentSequence("closedness_check: consecutive differences do not decay");
      }
    }
    report.sequences_checked++;

    const bool all_inside = std::all_of(seq.points.begin(), seq.points.end(),
                                        [&](const Vec2& p) { return membership(p); });
    if (all_inside && !membership(seq.limit)) {
      report.witnesses.push_back({static_cast<int>(si), seq.limit});
    }
  }
  return report;
}

}  // namespace kleekit
