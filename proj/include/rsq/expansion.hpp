#ifndef RSQ_EXPANSION_HPP
#define RSQ_EXPANSION_HPP

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "rsq/quadrature.hpp"
#include "rsq/vec3.hpp"

namespace rsq {

enum class ExpansionKind { Outer, Inner };

std::string_view to_string(ExpansionKind kind) noexcept;
/// Accepts "outer" / "inner"; throws ParseError otherwise.
ExpansionKind parse_expansion_kind(std::string_view text);

/// Signed point sources.
struct PointCharges {
    std::vector<Vec3> positions;
    std::vector<double> charges;

    void add(const Vec3& position, double charge)
    {
        positions.push_back(position);
        charges.push_back(charge);
    }
    [[nodiscard]] std::size_t size() const noexcept { return positions.size(); }
    [[nodiscard]] bool empty() const noexcept { return positions.empty(); }
    [[nodiscard]] double total_charge() const noexcept;
    /// Throws ContractError on mismatched lengths or non-finite entries.
    void validate() const;
};

/// Sources that sit on the wrong side of the bounding sphere. They do not make
/// the fit fail; they only void its accuracy guarantee.
struct FitDiagnostics {
    std::size_t misplaced_sources = 0;
    /// Outer fits: max |y - c| / R. Inner fits: max R / |x - c|. Below 1 is clean.
    double worst_radius_ratio = 0.0;

    [[nodiscard]] bool clean() const noexcept { return misplaced_sources == 0; }
};

/// A multipole expansion stored as effective charges w_i = w0_i sigma(R r_i)
/// on the nodes of a quadrature rule scaled to radius R about `center`.
class SurfaceExpansion {
public:
    SurfaceExpansion(ExpansionKind kind, const Vec3& center, double radius, RulePtr rule, int order,
                     std::vector<double> weights, FitDiagnostics diagnostics = {});

    static SurfaceExpansion zero(ExpansionKind kind, const Vec3& center, double radius, RulePtr rule, int order);

    /// Weights w_i = w0_i sigma(r_i) for a density given on the unit sphere.
    static SurfaceExpansion from_density(ExpansionKind kind, const Vec3& center, double radius, RulePtr rule,
                                         int order, const std::function<double(const Vec3&)>& sigma);

    [[nodiscard]] ExpansionKind kind() const noexcept { return kind_; }
    [[nodiscard]] const Vec3& center() const noexcept { return center_; }
    [[nodiscard]] double radius() const noexcept { return radius_; }
    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] const QuadratureRule& rule() const noexcept { return *rule_; }
    [[nodiscard]] const RulePtr& rule_ptr() const noexcept { return rule_; }
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
    [[nodiscard]] double weight(std::size_t i) const noexcept { return weights_[i]; }
    [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
    [[nodiscard]] const FitDiagnostics& diagnostics() const noexcept { return diagnostics_; }

    /// Surface density sigma(R r_i) = w_i / w0_i.
    [[nodiscard]] double density(std::size_t i) const noexcept { return weights_[i] / rule_->weight(i); }
    [[nodiscard]] double total_weight() const noexcept;

    /// center + R r_i
    [[nodiscard]] Vec3 surface_point(std::size_t i) const noexcept { return center_ + radius_ * rule_->point(i); }
    [[nodiscard]] std::vector<Vec3> surface_points() const;
    /// R r_i, i.e. surface points relative to the center.
    [[nodiscard]] std::vector<Vec3> scaled_nodes() const;

    /// Same kind, center, radius, rule and order.
    [[nodiscard]] bool compatible_with(const SurfaceExpansion& other) const noexcept;

    /// Weight-wise sum; only defined for compatible expansions (ContractError otherwise).
    SurfaceExpansion& operator+=(const SurfaceExpansion& other);
    friend SurfaceExpansion operator+(SurfaceExpansion a, const SurfaceExpansion& b) { return a += b; }

private:
    ExpansionKind kind_;
    Vec3 center_;
    double radius_;
    RulePtr rule_;
    int order_;
    std::vector<double> weights_;
    FitDiagnostics diagnostics_;
};

/// Reproducing-kernel projection of point sources onto the sphere (center, R).
/// Outer targets receive w0_j sum_s q_s K((y_s - c)/R, r_j); inner targets
/// receive w0_j sum_s q_s K(r_j, (y_s - c)/R). Fitting and every translation
/// operator reduce to this single call. Inner targets reject sources on the
/// sphere unless `allow_on_sphere` is set; translations set it because their
/// sources are the old surface nodes, where the kernel stays finite.
SurfaceExpansion project_sources(ExpansionKind kind, std::span<const Vec3> positions, std::span<const double> charges,
                                 const Vec3& center, double radius, RulePtr rule, int order,
                                 bool allow_on_sphere = false);

SurfaceExpansion fit_outer(const PointCharges& sources, const Vec3& center, double radius, int order);
SurfaceExpansion fit_outer(const PointCharges& sources, const Vec3& center, double radius, int order, RulePtr rule);

/// Throws SingularityError when a source lies on the sphere (within 1e-12
/// relative) or at its center.
SurfaceExpansion fit_inner(const PointCharges& sources, const Vec3& center, double radius, int order);
SurfaceExpansion fit_inner(const PointCharges& sources, const Vec3& center, double radius, int order, RulePtr rule);

/// sum_i w_i sum_{n<p} L_n(R r_i, x - c). Accurate for |x - c| > R.
double eval_outer_potential(const SurfaceExpansion& outer, const Vec3& x);
std::vector<double> eval_outer_potential(const SurfaceExpansion& outer, std::span<const Vec3> targets);

/// sum_i w_i sum_{n<p} L_n(y - c, R r_i). Accurate for |y - c| < R.
double eval_inner_potential(const SurfaceExpansion& inner, const Vec3& y);
std::vector<double> eval_inner_potential(const SurfaceExpansion& inner, std::span<const Vec3> targets);

/// sum_i w_i / |x - (c + R r_i)|: the surface weights used as plain point
/// charges. Throws SingularityError within 1e-12 of a node.
double eval_point_charge_potential(const SurfaceExpansion& exp, const Vec3& x);
std::vector<double> eval_point_charge_potential(const SurfaceExpansion& exp, std::span<const Vec3> targets);

/// The surface weights as a point-charge set at c + R r_i.
PointCharges as_point_charges(const SurfaceExpansion& exp);

/// Direct Coulomb sum over a point set. Throws SingularityError on coincidence.
double coulomb_potential(const PointCharges& sources, const Vec3& x);
std::vector<double> coulomb_potential(const PointCharges& sources, std::span<const Vec3> targets);

/// Energy between the sources of an outer expansion and those of an inner
/// expansion on the same sphere:
/// (1/R) sum_{i,j} w_i^o w_j^i sum_{n<p} L_n(r_i, r_j).
double interaction_energy(const SurfaceExpansion& outer, const SurfaceExpansion& inner);

/// Two disjoint outer expansions, surface weights treated as point charges.
/// Throws GeometryError when the bounding spheres overlap.
double energy_between_outers(const SurfaceExpansion& a, const SurfaceExpansion& b);

} // namespace rsq

#endif // RSQ_EXPANSION_HPP
