#pragma once

#include "kleekit/tolerance.hpp"
#include "kleekit/vec.hpp"

namespace kleekit {

// A plane through the origin, carrying an orthonormal in-plane basis.
// Invariants: |n| = 1, u1 ⊥ u2, u1 × u2 = n, n ⊥ u1, n ⊥ u2.
struct PlaneThroughOrigin {
  Vec3 n;
  Vec3 u1;
  Vec3 u2;

  Vec2 to_plane(const Vec3& p) const { return {p.dot(u1), p.dot(u2)}; }
  Vec3 from_plane(const Vec2& q) const { return u1 * q.x + u2 * q.y; }

  // Max deviation from the orthonormal-frame invariants; 0 for an exact frame.
  double frame_defect() const;
};

// Deterministic orthonormal completion of a unit normal. The in-plane seed is
// the coordinate axis with the smallest |component| in n (lowest index wins
// ties), so n = (0,0,1) yields u1 = (1,0,0), u2 = (0,1,0).
PlaneThroughOrigin orthonormal_basis(const Vec3& n, const ToleranceCfg& cfg = {});

// Convenience for raw (non-unit) directions: normalizes, then builds the basis.
PlaneThroughOrigin plane_from_direction(const Vec3& dir, const ToleranceCfg& cfg = {});

}  // namespace kleekit
