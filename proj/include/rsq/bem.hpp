#ifndef RSQ_BEM_HPP
#define RSQ_BEM_HPP

// Boundary integrals over spheres carrying a surface density in quadrature
// form, and a potential-flow solver for rigidly translating spheres.
//
// Normals point out of each sphere (n = r_i). With v = -grad(phi) the
// boundary condition at every collocation point of sphere s is
// n . v_s = -n . grad(sum over spheres of the outer potential).

#include <span>
#include <vector>

#include "rsq/expansion.hpp"
#include "rsq/quadrature.hpp"
#include "rsq/vec3.hpp"

namespace rsq {

/// Single layer outside the sphere: sum_{m<p,i} L_m(R r_i, x - c) w_i.
double single_layer_ext(const SurfaceExpansion& exp, const Vec3& x);
/// Double layer outside: sum (m/R) L_m(R r_i, x - c) w_i.
double double_layer_ext(const SurfaceExpansion& exp, const Vec3& x);
/// Single layer inside: sum L_m(y - c, R r_i) w_i.
double single_layer_int(const SurfaceExpansion& exp, const Vec3& y);
/// Double layer inside: -sum ((m+1)/R) L_m(y - c, R r_i) w_i.
double double_layer_int(const SurfaceExpansion& exp, const Vec3& y);

/// R^2 (F_ext - F_int) with both series evaluated on the surface at R y_hat.
/// Equals 4 pi sigma(y_hat) for any density of degree below p.
double jump_check(const SurfaceExpansion& exp, const Vec3& y_hat);

/// grad_x of the outer potential, from the differentiated recurrence.
Vec3 outer_gradient(const SurfaceExpansion& outer, const Vec3& x);
std::vector<Vec3> outer_gradient(const SurfaceExpansion& outer, std::span<const Vec3> targets);

struct SphereBoundary {
    Vec3 center;
    double radius = 1.0;
    Vec3 velocity;
    RulePtr rule;
    int order = 1;

    /// Uses rule_for_expansion(order) when `rule` is null.
    static SphereBoundary make(const Vec3& center, double radius, const Vec3& velocity, int order,
                               RulePtr rule = nullptr);
    /// Throws DomainError / ContractError on a bad radius, order or rule.
    void validate() const;
};

struct FlowSolution {
    std::vector<SurfaceExpansion> expansions;
    /// Weighted RMS of the boundary-condition residual over each sphere's own nodes.
    std::vector<double> residual_report;
    /// Reciprocal condition estimate of the factorized system.
    double rcond = 0.0;

    [[nodiscard]] double potential(const Vec3& x) const;
    /// -grad(phi)
    [[nodiscard]] Vec3 velocity(const Vec3& x) const;
};

/// Throws GeometryError when two closed balls intersect, SolverError when the
/// condition estimate exceeds 1e12.
FlowSolution solve_potential_flow(std::span<const SphereBoundary> spheres);

/// Per sphere: weighted RMS over the reference nodes of |n . v0 + n . grad(phi)|.
std::vector<double> boundary_error(const FlowSolution& sol, std::span<const SphereBoundary> spheres,
                                   const QuadratureRule& reference);

} // namespace rsq

#endif // RSQ_BEM_HPP
