#ifndef RSQ_TRANSLATION_HPP
#define RSQ_TRANSLATION_HPP

#include "rsq/expansion.hpp"

namespace rsq {

/// Outer -> outer. The source sphere must lie inside the new one:
/// |x0 - x1| + R0 <= R1 (1e-12 slack), else GeometryError.
/// w_j = w0_j sum_i K((R0 s_i + x0 - x1) / R1, r_j) w_i
SurfaceExpansion shift_outer(const SurfaceExpansion& src, const Vec3& new_center, double new_radius);

/// Outer -> inner about a distant center. Throws GeometryError when some
/// kernel argument |(R0 s_i - t) / R1| with t = x1 - x0 comes within 1e-9 of
/// the unit ball.
/// w_j = w0_j sum_i K(r_j, (R0 s_i - t) / R1) w_i
SurfaceExpansion outer_to_inner(const SurfaceExpansion& src, const Vec3& new_center, double new_radius);

/// Inner -> inner. The new sphere must lie inside the old one:
/// |t| + R1 <= R0 (1e-12 slack), else GeometryError. Same kernel as outer_to_inner.
SurfaceExpansion shift_inner(const SurfaceExpansion& src, const Vec3& new_center, double new_radius);

} // namespace rsq

#endif // RSQ_TRANSLATION_HPP
