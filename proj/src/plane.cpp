#include "kleekit/plane.hpp"

#include <algorithm>
#include <cmath>

#include "kleekit/errors.hpp"

namespace kleekit {

double PlaneThroughOrigin::frame_defect() const {
  double d = std::abs(n.norm() - 1.0);
  d = std::max(d, std::abs(u1.norm() - 1.0));
  d = std::max(d, std::abs(u2.norm() - 1.0));
  d = std::max(d, std::abs(u1.dot(u2)));
  d = std::max(d, std::abs(n.dot(u1)));
  d = std::max(d, std::abs(n.dot(u2)));
  d = std::max(d, (u1.cross(u2) - n).norm());
  return d;
}

PlaneThroughOrigin orthonormal_basis(const Vec3& n, const ToleranceCfg& cfg) {
  if (!n.finite()) throw NonUnitNormal("normal has non-finite components");
  const double len = n.norm();
  if (std::abs(len - 1.0) > cfg.eps_rel) {
    throw NonUnitNormal("|n| deviates from 1 beyond eps_rel");
  }

  const double ax = std::abs(n.x), ay = std::abs(n.y), az = std::abs(n.z);
  Vec3 seed{1.0, 0.0, 0.0};
  if (ay < ax || az < ax) seed = (ay <= az) ? Vec3{0.0, 1.0, 0.0} : Vec3{0.0, 0.0, 1.0};

  Vec3 u1 = (seed - n * seed.dot(n)).normalized();
  Vec3 u2 = n.cross(u1);
  return PlaneThroughOrigin{n, u1, u2};
}

PlaneThroughOrigin plane_from_direction(const Vec3& dir, const ToleranceCfg& cfg) {
  if (!dir.finite()) throw ZeroDirection("direction has non-finite components");
  const double len = dir.norm();
  if (len <= cfg.eps_geom) throw ZeroDirection();
  return orthonormal_basis(dir / len, cfg);
}

}  // namespace kleekit
