#ifndef RSQ_QUADRATURE_HPP
#define RSQ_QUADRATURE_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rsq/vec3.hpp"

namespace rsq {

/// Nodes r_i on the unit sphere with weights w0_i summing to 4 pi, exact for
/// every polynomial of total degree <= exactness_degree.
///
/// A handful of published Lebedev rules (orders 13, 25, 27) carry a few
/// negative weights; the rule type accepts them.
class QuadratureRule {
public:
    QuadratureRule(std::vector<Vec3> points, std::vector<double> weights, int exactness_degree);

    [[nodiscard]] std::span<const Vec3> points() const noexcept { return points_; }
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
    [[nodiscard]] const Vec3& point(std::size_t i) const noexcept { return points_[i]; }
    [[nodiscard]] double weight(std::size_t i) const noexcept { return weights_[i]; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] int exactness_degree() const noexcept { return degree_; }

    /// Largest expansion order p with 2p - 2 <= exactness_degree.
    [[nodiscard]] int max_expansion_order() const noexcept { return degree_ / 2 + 1; }

    /// Same nodes, weights and degree (bitwise).
    [[nodiscard]] bool same_as(const QuadratureRule& other) const noexcept;

private:
    std::vector<Vec3> points_;
    std::vector<double> weights_;
    int degree_;
};

using RulePtr = std::shared_ptr<const QuadratureRule>;

/// Orders of the embedded Lebedev tables, ascending.
std::span<const int> lebedev_orders() noexcept;

/// Embedded Lebedev rule of the given precision. Rules are built once and
/// shared. Throws LookupError listing the supported orders.
RulePtr lebedev_rule(int order);

/// Smallest embedded rule with exactness_degree >= 2p - 2. Throws
/// CapacityError past the largest table.
RulePtr rule_for_expansion(int p);

/// Largest p that rule_for_expansion accepts.
int max_supported_expansion_order() noexcept;

/// FNV-1a 64 over the little-endian bytes of the embedded (x, y, z, w) records.
std::uint64_t table_checksum(int order);
/// Checksum stored next to the table at generation time.
std::uint64_t stored_table_checksum(int order);

/// Exact integral of x^a y^b z^c over the unit sphere.
double sphere_monomial_integral(int a, int b, int c) noexcept;

struct ExactnessReport {
    int degree = 0;
    /// Larger of the two errors below.
    double max_abs_error = 0.0;
    double monomial_error = 0.0;
    std::array<int, 3> worst_monomial{0, 0, 0};
    std::size_t monomials_checked = 0;
    /// Worst |sum_i w_i P_n(r_i . a) - 4 pi delta_n0| over n <= degree and
    /// 2 degree + 1 spiral directions a. High-degree monomials have almost no
    /// harmonic content of their own degree, so only this part shows a rule
    /// failing just past its design degree when the rule is large.
    double zonal_error = 0.0;
    int worst_zonal_degree = 0;
};

/// Integrates every monomial, and the zonal Legendre polynomials about a set of
/// directions, of total degree <= degree and reports the worst deviation from
/// the closed forms.
ExactnessReport verify_exactness(const QuadratureRule& rule, int degree);

} // namespace rsq

#endif // RSQ_QUADRATURE_HPP
