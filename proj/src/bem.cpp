#include "rsq/bem.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "rsq/error.hpp"
#include "rsq/kernels.hpp"
#include "rsq/legendre.hpp"

namespace rsq {

namespace {

constexpr double kMaxCondition = 1e12;

double layer(const SurfaceExpansion& exp, const Vec3& x, kernels::SourceSlot slot, const std::vector<double>& coeffs)
{
    const auto nodes = exp.scaled_nodes();
    const Vec3 rel = x - exp.center();
    double out = 0.0;
    kernels::serial::series_sum(slot, nodes, exp.weights(), std::span(&rel, 1), coeffs, std::span(&out, 1));
    return out;
}

std::vector<double> double_layer_coeffs(int p, double radius, bool exterior)
{
    std::vector<double> c(p);
    for (int m = 0; m < p; ++m)
        c[m] = exterior ? m / radius : -(m + 1) / radius;
    return c;
}

// Value projector Pi_ij = K(r_i, r_j) w0_j and weight projector Q_ij = w0_i K(r_i, r_j).
void projectors(const QuadratureRule& rule, int p, Eigen::MatrixXd& pi, Eigen::MatrixXd& q)
{
    const auto coeffs = reproducing_kernel_coeffs(p);
    const auto n = static_cast<Eigen::Index>(rule.size());
    pi.resize(n, n);
    q.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double k = weighted_legendre_sum(rule.point(i), rule.point(j), coeffs);
            pi(i, j) = k * rule.weight(j);
            q(i, j) = rule.weight(i) * k;
        }
}

double weighted_rms(const QuadratureRule& rule, std::span<const double> residual)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
        acc += rule.weight(i) * residual[i] * residual[i];
    return std::sqrt(std::abs(acc) / (4.0 * std::numbers::pi));
}

std::vector<double> residuals_at(const FlowSolution& sol, const SphereBoundary& sphere, const QuadratureRule& rule)
{
    std::vector<Vec3> pts(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i)
        pts[i] = sphere.center + sphere.radius * rule.point(i);
    std::vector<Vec3> grad(pts.size());
    for (const auto& exp : sol.expansions) {
        const auto g = outer_gradient(exp, pts);
        for (std::size_t i = 0; i < pts.size(); ++i)
            grad[i] += g[i];
    }
    std::vector<double> r(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        r[i] = dot(rule.point(i), sphere.velocity) + dot(rule.point(i), grad[i]);
    return r;
}

} // namespace

double single_layer_ext(const SurfaceExpansion& exp, const Vec3& x)
{
    return layer(exp, x, kernels::SourceSlot::First, unit_coeffs(exp.order()));
}

double double_layer_ext(const SurfaceExpansion& exp, const Vec3& x)
{
    return layer(exp, x, kernels::SourceSlot::First, double_layer_coeffs(exp.order(), exp.radius(), true));
}

double single_layer_int(const SurfaceExpansion& exp, const Vec3& y)
{
    return layer(exp, y, kernels::SourceSlot::Second, unit_coeffs(exp.order()));
}

double double_layer_int(const SurfaceExpansion& exp, const Vec3& y)
{
    return layer(exp, y, kernels::SourceSlot::Second, double_layer_coeffs(exp.order(), exp.radius(), false));
}

double jump_check(const SurfaceExpansion& exp, const Vec3& y_hat)
{
    if (std::abs(norm(y_hat) - 1.0) > 1e-9)
        throw DomainError("jump_check needs a unit direction");
    const Vec3 y = exp.center() + exp.radius() * y_hat;
    const double r2 = exp.radius() * exp.radius();
    return r2 * (double_layer_ext(exp, y) - double_layer_int(exp, y));
}

Vec3 outer_gradient(const SurfaceExpansion& outer, const Vec3& x)
{
    return outer_gradient(outer, std::span(&x, 1)).front();
}

std::vector<Vec3> outer_gradient(const SurfaceExpansion& outer, std::span<const Vec3> targets)
{
    if (outer.kind() != ExpansionKind::Outer)
        throw ContractError("outer_gradient needs an outer expansion");
    std::vector<Vec3> rel(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t)
        rel[t] = targets[t] - outer.center();
    std::vector<Vec3> out(targets.size());
    kernels::omp::series_gradient(outer.scaled_nodes(), outer.weights(), rel, unit_coeffs(outer.order()), out);
    return out;
}

SphereBoundary SphereBoundary::make(const Vec3& center, double radius, const Vec3& velocity, int order, RulePtr rule)
{
    SphereBoundary s{center, radius, velocity, rule ? std::move(rule) : rule_for_expansion(order), order};
    s.validate();
    return s;
}

void SphereBoundary::validate() const
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw DomainError("sphere radius must be positive");
    if (order < 1)
        throw DomainError("sphere expansion order must be positive");
    if (!rule)
        throw ContractError("sphere boundary needs a quadrature rule");
    if (rule->exactness_degree() < 2 * order - 2)
        throw ContractError("rule of degree " + std::to_string(rule->exactness_degree()) +
                            " cannot carry an order-" + std::to_string(order) + " expansion");
}

double FlowSolution::potential(const Vec3& x) const
{
    double phi = 0.0;
    for (const auto& exp : expansions)
        phi += eval_outer_potential(exp, x);
    return phi;
}

Vec3 FlowSolution::velocity(const Vec3& x) const
{
    Vec3 g;
    for (const auto& exp : expansions)
        g += outer_gradient(exp, x);
    return -1.0 * g;
}

FlowSolution solve_potential_flow(std::span<const SphereBoundary> spheres)
{
    if (spheres.empty())
        throw ContractError("potential flow needs at least one sphere");
    for (const auto& s : spheres)
        s.validate();
    for (std::size_t a = 0; a < spheres.size(); ++a)
        for (std::size_t b = a + 1; b < spheres.size(); ++b)
            if (distance(spheres[a].center, spheres[b].center) <= spheres[a].radius + spheres[b].radius)
                throw GeometryError("spheres " + std::to_string(a) + " and " + std::to_string(b) + " overlap");

    std::vector<Eigen::Index> offset(spheres.size() + 1, 0);
    for (std::size_t s = 0; s < spheres.size(); ++s)
        offset[s + 1] = offset[s] + static_cast<Eigen::Index>(spheres[s].rule->size());
    const Eigen::Index total = offset.back();

    // Raw collocation rows A w = b. Only the degree-<p part of each sphere's
    // weights and of each row's boundary data is meaningful, so the system is
    // solved on that subspace: Pi A Q w + (I - Q) w = Pi b.
    Eigen::MatrixXd A(total, total);
    Eigen::VectorXd b(total);
    for (std::size_t s = 0; s < spheres.size(); ++s) {
        const auto& S = spheres[s];
        const auto ns = static_cast<std::size_t>(offset[s + 1] - offset[s]);
        std::vector<Vec3> normals(ns);
        for (std::size_t i = 0; i < ns; ++i) {
            normals[i] = S.rule->point(i);
            b(offset[s] + i) = dot(normals[i], S.velocity);
        }
        for (std::size_t t = 0; t < spheres.size(); ++t) {
            const auto& T = spheres[t];
            const auto nt = static_cast<std::size_t>(offset[t + 1] - offset[t]);
            std::vector<Vec3> surface(nt), targets(ns);
            for (std::size_t j = 0; j < nt; ++j)
                surface[j] = T.radius * T.rule->point(j);
            for (std::size_t i = 0; i < ns; ++i)
                targets[i] = S.center + S.radius * S.rule->point(i) - T.center;
            std::vector<double> block(ns * nt);
            kernels::omp::normal_flux_block(surface, targets, normals, unit_coeffs(T.order), block);
            for (std::size_t i = 0; i < ns; ++i)
                for (std::size_t j = 0; j < nt; ++j)
                    A(offset[s] + i, offset[t] + j) = block[i * nt + j];
        }
    }

    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(total, total);
    Eigen::VectorXd rhs(total);
    std::vector<Eigen::MatrixXd> pis(spheres.size()), qs(spheres.size());
    for (std::size_t s = 0; s < spheres.size(); ++s)
        projectors(*spheres[s].rule, spheres[s].order, pis[s], qs[s]);
    for (std::size_t s = 0; s < spheres.size(); ++s) {
        const Eigen::Index r0 = offset[s], nr = offset[s + 1] - offset[s];
        rhs.segment(r0, nr) = pis[s] * b.segment(r0, nr);
        M.block(r0, r0, nr, nr) -= qs[s];
        const Eigen::MatrixXd rows = pis[s] * A.middleRows(r0, nr);
        for (std::size_t t = 0; t < spheres.size(); ++t) {
            const Eigen::Index c0 = offset[t], nc = offset[t + 1] - offset[t];
            M.block(r0, c0, nr, nc) += rows.middleCols(c0, nc) * qs[t];
        }
    }

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
    const double rcond = lu.rcond();
    if (!(rcond > 0.0) || 1.0 / rcond > kMaxCondition)
        throw SolverError("collocation system is singular or ill-conditioned (condition estimate " +
                          std::to_string(rcond > 0.0 ? 1.0 / rcond : INFINITY) + ")");
    const Eigen::VectorXd w = lu.solve(rhs);

    FlowSolution sol;
    sol.rcond = rcond;
    for (std::size_t s = 0; s < spheres.size(); ++s) {
        const auto& S = spheres[s];
        std::vector<double> ws(w.data() + offset[s], w.data() + offset[s + 1]);
        sol.expansions.emplace_back(ExpansionKind::Outer, S.center, S.radius, S.rule, S.order, std::move(ws));
    }
    for (const auto& S : spheres)
        sol.residual_report.push_back(weighted_rms(*S.rule, residuals_at(sol, S, *S.rule)));
    return sol;
}

std::vector<double> boundary_error(const FlowSolution& sol, std::span<const SphereBoundary> spheres,
                                   const QuadratureRule& reference)
{
    if (sol.expansions.size() != spheres.size())
        throw ContractError("flow solution and sphere list differ in length");
    std::vector<double> err;
    for (const auto& S : spheres)
        err.push_back(weighted_rms(reference, residuals_at(sol, S, reference)));
    return err;
}

} // namespace rsq
