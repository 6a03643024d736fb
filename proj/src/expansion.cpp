#include "rsq/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rsq/error.hpp"
#include "rsq/kernels.hpp"
#include "rsq/legendre.hpp"

namespace rsq {

namespace {

constexpr double kSingularSlack = 1e-12;

void require_kind(const SurfaceExpansion& exp, ExpansionKind kind, const char* what)
{
    if (exp.kind() != kind)
        throw ContractError(std::string(what) + " needs an " + std::string(to_string(kind)) + " expansion");
}

} // namespace

std::string_view to_string(ExpansionKind kind) noexcept
{
    return kind == ExpansionKind::Outer ? "outer" : "inner";
}

ExpansionKind parse_expansion_kind(std::string_view text)
{
    if (text == "outer")
        return ExpansionKind::Outer;
    if (text == "inner")
        return ExpansionKind::Inner;
    throw ParseError("unknown expansion kind '" + std::string(text) + "'");
}

double PointCharges::total_charge() const noexcept
{
    double q = 0.0;
    for (double c : charges)
        q += c;
    return q;
}

void PointCharges::validate() const
{
    if (positions.size() != charges.size())
        throw ContractError("point charges need one charge per position");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const auto& p = positions[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z) || !std::isfinite(charges[i]))
            throw ContractError("point charge " + std::to_string(i) + " is not finite");
    }
}

SurfaceExpansion::SurfaceExpansion(ExpansionKind kind, const Vec3& center, double radius, RulePtr rule, int order,
                                   std::vector<double> weights, FitDiagnostics diagnostics)
    : kind_(kind), center_(center), radius_(radius), rule_(std::move(rule)), order_(order),
      weights_(std::move(weights)), diagnostics_(diagnostics)
{
    if (!rule_)
        throw ContractError("expansion needs a quadrature rule");
    if (!(radius_ > 0.0) || !std::isfinite(radius_))
        throw DomainError("expansion radius must be positive, got " + std::to_string(radius_));
    if (order_ < 1)
        throw DomainError("expansion order must be positive");
    if (order_ >= kMaxRecurrenceOrder)
        throw CapacityError("expansion order " + std::to_string(order_) + " is too large");
    if (rule_->exactness_degree() < 2 * order_ - 2)
        throw ContractError("rule of degree " + std::to_string(rule_->exactness_degree()) +
                            " cannot carry an order-" + std::to_string(order_) + " expansion");
    if (weights_.size() != rule_->size())
        throw ContractError("expansion needs one weight per quadrature node");
}

SurfaceExpansion SurfaceExpansion::zero(ExpansionKind kind, const Vec3& center, double radius, RulePtr rule,
                                        int order)
{
    const std::size_t n = rule ? rule->size() : 0;
    return {kind, center, radius, std::move(rule), order, std::vector<double>(n, 0.0)};
}

SurfaceExpansion SurfaceExpansion::from_density(ExpansionKind kind, const Vec3& center, double radius,
                                                RulePtr rule, int order,
                                                const std::function<double(const Vec3&)>& sigma)
{
    if (!rule)
        throw ContractError("expansion needs a quadrature rule");
    std::vector<double> w(rule->size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = rule->weight(i) * sigma(rule->point(i));
    return {kind, center, radius, std::move(rule), order, std::move(w)};
}

double SurfaceExpansion::total_weight() const noexcept
{
    double s = 0.0;
    for (double w : weights_)
        s += w;
    return s;
}

std::vector<Vec3> SurfaceExpansion::surface_points() const
{
    std::vector<Vec3> pts(size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        pts[i] = surface_point(i);
    return pts;
}

std::vector<Vec3> SurfaceExpansion::scaled_nodes() const
{
    std::vector<Vec3> pts(size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        pts[i] = radius_ * rule_->point(i);
    return pts;
}

bool SurfaceExpansion::compatible_with(const SurfaceExpansion& other) const noexcept
{
    return kind_ == other.kind_ && center_ == other.center_ && radius_ == other.radius_ &&
           order_ == other.order_ && rule_->same_as(*other.rule_);
}

SurfaceExpansion& SurfaceExpansion::operator+=(const SurfaceExpansion& other)
{
    if (!compatible_with(other))
        throw ContractError("expansions differ in kind, center, radius, rule or order; translate first");
    for (std::size_t i = 0; i < weights_.size(); ++i)
        weights_[i] += other.weights_[i];
    diagnostics_.misplaced_sources += other.diagnostics_.misplaced_sources;
    diagnostics_.worst_radius_ratio = std::max(diagnostics_.worst_radius_ratio, other.diagnostics_.worst_radius_ratio);
    return *this;
}

SurfaceExpansion project_sources(ExpansionKind kind, std::span<const Vec3> positions, std::span<const double> charges,
                                 const Vec3& center, double radius, RulePtr rule, int order, bool allow_on_sphere)
{
    if (positions.size() != charges.size())
        throw ContractError("point charges need one charge per position");
    auto exp = SurfaceExpansion::zero(kind, center, radius, rule, order);

    FitDiagnostics diag;
    std::vector<Vec3> scaled(positions.size());
    for (std::size_t s = 0; s < positions.size(); ++s) {
        scaled[s] = (positions[s] - center) / radius;
        const double u = norm(scaled[s]);
        if (kind == ExpansionKind::Outer) {
            diag.worst_radius_ratio = std::max(diag.worst_radius_ratio, u);
            if (u > 1.0 + kSingularSlack)
                ++diag.misplaced_sources;
        } else {
            if (u == 0.0 || (!allow_on_sphere && std::abs(u - 1.0) <= kSingularSlack))
                throw SingularityError("inner-expansion source " + std::to_string(s) +
                                       " lies on the bounding sphere or at its center");
            diag.worst_radius_ratio = std::max(diag.worst_radius_ratio, 1.0 / u);
            if (u < 1.0 - kSingularSlack)
                ++diag.misplaced_sources;
        }
    }

    std::vector<double> w(rule->size());
    const auto coeffs = reproducing_kernel_coeffs(order);
    const auto slot = kind == ExpansionKind::Outer ? kernels::SourceSlot::First : kernels::SourceSlot::Second;
    kernels::omp::project(slot, scaled, charges, *rule, coeffs, w);
    return {kind, center, radius, std::move(rule), order, std::move(w), diag};
}

SurfaceExpansion fit_outer(const PointCharges& sources, const Vec3& center, double radius, int order)
{
    return fit_outer(sources, center, radius, order, rule_for_expansion(order));
}

SurfaceExpansion fit_outer(const PointCharges& sources, const Vec3& center, double radius, int order, RulePtr rule)
{
    sources.validate();
    if (!(radius > 0.0))
        throw DomainError("expansion radius must be positive");
    return project_sources(ExpansionKind::Outer, sources.positions, sources.charges, center, radius, std::move(rule),
                           order);
}

SurfaceExpansion fit_inner(const PointCharges& sources, const Vec3& center, double radius, int order)
{
    return fit_inner(sources, center, radius, order, rule_for_expansion(order));
}

SurfaceExpansion fit_inner(const PointCharges& sources, const Vec3& center, double radius, int order, RulePtr rule)
{
    sources.validate();
    if (!(radius > 0.0))
        throw DomainError("expansion radius must be positive");
    return project_sources(ExpansionKind::Inner, sources.positions, sources.charges, center, radius, std::move(rule),
                           order);
}

std::vector<double> eval_outer_potential(const SurfaceExpansion& outer, std::span<const Vec3> targets)
{
    require_kind(outer, ExpansionKind::Outer, "eval_outer_potential");
    std::vector<Vec3> rel(targets.size());
    for (std::size_t t = 0; t < rel.size(); ++t) {
        rel[t] = targets[t] - outer.center();
        if (norm2(rel[t]) == 0.0)
            throw SingularityError("outer expansion evaluated at its own center");
    }
    const auto nodes = outer.scaled_nodes();
    const auto coeffs = unit_coeffs(outer.order());
    std::vector<double> out(targets.size());
    kernels::omp::series_sum(kernels::SourceSlot::First, nodes, outer.weights(), rel, coeffs, out);
    return out;
}

double eval_outer_potential(const SurfaceExpansion& outer, const Vec3& x)
{
    return eval_outer_potential(outer, std::span<const Vec3>(&x, 1)).front();
}

std::vector<double> eval_inner_potential(const SurfaceExpansion& inner, std::span<const Vec3> targets)
{
    require_kind(inner, ExpansionKind::Inner, "eval_inner_potential");
    std::vector<Vec3> rel(targets.size());
    for (std::size_t t = 0; t < rel.size(); ++t)
        rel[t] = targets[t] - inner.center();
    const auto nodes = inner.scaled_nodes();
    const auto coeffs = unit_coeffs(inner.order());
    std::vector<double> out(targets.size());
    kernels::omp::series_sum(kernels::SourceSlot::Second, nodes, inner.weights(), rel, coeffs, out);
    return out;
}

double eval_inner_potential(const SurfaceExpansion& inner, const Vec3& y)
{
    return eval_inner_potential(inner, std::span<const Vec3>(&y, 1)).front();
}

std::vector<double> eval_point_charge_potential(const SurfaceExpansion& exp, std::span<const Vec3> targets)
{
    const auto pts = exp.surface_points();
    std::vector<double> out(targets.size());
    const double dmin = kernels::omp::coulomb_sum(pts, exp.weights(), targets, out);
    if (dmin < kSingularSlack)
        throw SingularityError("point-charge evaluation coincides with a surface node");
    return out;
}

double eval_point_charge_potential(const SurfaceExpansion& exp, const Vec3& x)
{
    return eval_point_charge_potential(exp, std::span<const Vec3>(&x, 1)).front();
}

PointCharges as_point_charges(const SurfaceExpansion& exp)
{
    PointCharges pc;
    pc.positions = exp.surface_points();
    pc.charges.assign(exp.weights().begin(), exp.weights().end());
    return pc;
}

std::vector<double> coulomb_potential(const PointCharges& sources, std::span<const Vec3> targets)
{
    sources.validate();
    std::vector<double> out(targets.size());
    const double dmin = kernels::omp::coulomb_sum(sources.positions, sources.charges, targets, out);
    if (dmin < kSingularSlack)
        throw SingularityError("Coulomb target coincides with a source");
    return out;
}

double coulomb_potential(const PointCharges& sources, const Vec3& x)
{
    return coulomb_potential(sources, std::span<const Vec3>(&x, 1)).front();
}

double interaction_energy(const SurfaceExpansion& outer, const SurfaceExpansion& inner)
{
    require_kind(outer, ExpansionKind::Outer, "interaction_energy");
    require_kind(inner, ExpansionKind::Inner, "interaction_energy");
    if (!(outer.center() == inner.center()) || outer.radius() != inner.radius() ||
        outer.order() != inner.order() || !outer.rule().same_as(inner.rule()))
        throw ContractError("interaction_energy needs expansions sharing center, radius, rule and order");

    // sum_j w_j^i * [sum_i w_i^o sum_n L_n(R r_i, R r_j)], and L_n(R a, R b) = L_n(a, b) / R
    const auto nodes = outer.scaled_nodes();
    const auto coeffs = unit_coeffs(outer.order());
    std::vector<double> phi(nodes.size());
    kernels::omp::series_sum(kernels::SourceSlot::First, nodes, outer.weights(), nodes, coeffs, phi);
    double e = 0.0;
    for (std::size_t j = 0; j < phi.size(); ++j)
        e += inner.weight(j) * phi[j];
    return e;
}

double energy_between_outers(const SurfaceExpansion& a, const SurfaceExpansion& b)
{
    require_kind(a, ExpansionKind::Outer, "energy_between_outers");
    require_kind(b, ExpansionKind::Outer, "energy_between_outers");
    if (distance(a.center(), b.center()) <= a.radius() + b.radius())
        throw GeometryError("energy_between_outers needs disjoint bounding spheres");
    const auto pa = a.surface_points();
    const auto pb = b.surface_points();
    std::vector<double> phi(pb.size());
    kernels::omp::coulomb_sum(pa, a.weights(), pb, phi);
    double e = 0.0;
    for (std::size_t k = 0; k < phi.size(); ++k)
        e += b.weight(k) * phi[k];
    return e;
}

} // namespace rsq
