#include "rsq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>
#include <sstream>
#include <string>

#include "rsq/error.hpp"

namespace rsq {

namespace {

struct EmbeddedTable {
    int order;
    std::size_t points;
    const double* data;
    std::uint64_t checksum;
};

#include "lebedev_tables.inc"

constexpr std::size_t kTableCount = std::size(kEmbeddedTables);

constexpr auto kOrders = [] {
    std::array<int, kTableCount> out{};
    for (std::size_t i = 0; i < kTableCount; ++i)
        out[i] = kEmbeddedTables[i].order;
    return out;
}();

const EmbeddedTable* find_table(int order) noexcept
{
    for (const auto& t : kEmbeddedTables)
        if (t.order == order)
            return &t;
    return nullptr;
}

std::string supported_list()
{
    std::ostringstream os;
    for (std::size_t i = 0; i < kTableCount; ++i)
        os << (i ? ", " : "") << kOrders[i];
    return os.str();
}

RulePtr build_rule(const EmbeddedTable& t)
{
    std::vector<Vec3> pts(t.points);
    std::vector<double> w(t.points);
    for (std::size_t i = 0; i < t.points; ++i) {
        const double* rec = t.data + 4 * i;
        pts[i] = {rec[0], rec[1], rec[2]};
        w[i] = rec[3];
    }
    return std::make_shared<const QuadratureRule>(std::move(pts), std::move(w), t.order);
}

double odd_double_factorial(int n) noexcept
{
    // n!! for odd n >= -1
    double r = 1.0;
    for (int k = n; k > 1; k -= 2)
        r *= k;
    return r;
}

} // namespace

QuadratureRule::QuadratureRule(std::vector<Vec3> points, std::vector<double> weights, int exactness_degree)
    : points_(std::move(points)), weights_(std::move(weights)), degree_(exactness_degree)
{
    if (points_.size() != weights_.size())
        throw ContractError("quadrature rule needs one weight per point");
    if (points_.empty())
        throw ContractError("quadrature rule has no points");
    if (degree_ < 0)
        throw ContractError("quadrature exactness degree must be non-negative");
    double total = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (std::abs(norm(points_[i]) - 1.0) > 1e-12)
            throw ContractError("quadrature node " + std::to_string(i) + " is not a unit vector");
        total += weights_[i];
    }
    if (std::abs(total - 4.0 * std::numbers::pi) > 1e-10)
        throw ContractError("quadrature weights must sum to 4 pi");
}

bool QuadratureRule::same_as(const QuadratureRule& other) const noexcept
{
    return this == &other || (degree_ == other.degree_ && points_ == other.points_ && weights_ == other.weights_);
}

std::span<const int> lebedev_orders() noexcept { return kOrders; }

RulePtr lebedev_rule(int order)
{
    static std::array<std::once_flag, kTableCount> flags;
    static std::array<RulePtr, kTableCount> cache;
    for (std::size_t i = 0; i < kTableCount; ++i) {
        if (kOrders[i] != order)
            continue;
        std::call_once(flags[i], [i] { cache[i] = build_rule(kEmbeddedTables[i]); });
        return cache[i];
    }
    throw LookupError("no embedded Lebedev rule of order " + std::to_string(order) +
                      "; supported orders: " + supported_list());
}

RulePtr rule_for_expansion(int p)
{
    if (p < 1)
        throw DomainError("expansion order must be positive");
    for (int order : kOrders)
        if (order >= 2 * p - 2)
            return lebedev_rule(order);
    throw CapacityError("expansion order " + std::to_string(p) +
                        " needs a rule of degree " + std::to_string(2 * p - 2) +
                        "; maximum supported p is " + std::to_string(max_supported_expansion_order()));
}

int max_supported_expansion_order() noexcept { return kOrders.back() / 2 + 1; }

std::uint64_t table_checksum(int order)
{
    const auto* t = find_table(order);
    if (!t)
        throw LookupError("no embedded Lebedev rule of order " + std::to_string(order));
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (std::size_t k = 0; k < 4 * t->points; ++k) {
        std::uint64_t bits;
        std::memcpy(&bits, t->data + k, sizeof bits);
        for (int b = 0; b < 8; ++b) {
            h ^= (bits >> (8 * b)) & 0xFFu;
            h *= 0x100000001B3ull;
        }
    }
    return h;
}

std::uint64_t stored_table_checksum(int order)
{
    const auto* t = find_table(order);
    if (!t)
        throw LookupError("no embedded Lebedev rule of order " + std::to_string(order));
    return t->checksum;
}

double sphere_monomial_integral(int a, int b, int c) noexcept
{
    if (a % 2 || b % 2 || c % 2)
        return 0.0;
    // 4 pi (a-1)!! (b-1)!! (c-1)!! / (a+b+c+1)!!, accumulated as a ratio
    double r = 4.0 * std::numbers::pi;
    int denom = a + b + c + 1;
    for (int e : {a, b, c}) {
        for (int k = e - 1; k > 0; k -= 2) {
            r *= double(k) / denom;
            denom -= 2;
        }
    }
    return r / odd_double_factorial(denom);
}

ExactnessReport verify_exactness(const QuadratureRule& rule, int degree)
{
    if (degree < 0)
        throw DomainError("exactness degree must be non-negative");
    const std::size_t n = rule.size();
    const std::size_t d1 = static_cast<std::size_t>(degree) + 1;
    std::vector<double> xp(d1 * n), yp(d1 * n), zp(d1 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& r = rule.point(i);
        double px = 1.0, py = 1.0, pz = 1.0;
        for (std::size_t k = 0; k < d1; ++k) {
            xp[k * n + i] = px;
            yp[k * n + i] = py;
            zp[k * n + i] = pz;
            px *= r.x;
            py *= r.y;
            pz *= r.z;
        }
    }
    const auto w = rule.weights();

    // one slot per (a, b) so the parallel and serial reductions agree exactly
    std::vector<ExactnessReport> partial(d1 * d1);
#pragma omp parallel for schedule(dynamic)
    for (int ab = 0; ab < int(d1 * d1); ++ab) {
        const int a = ab / int(d1);
        const int b = ab % int(d1);
        if (a + b > degree)
            continue;
        std::vector<double> t(n);
        for (std::size_t i = 0; i < n; ++i)
            t[i] = w[i] * xp[a * n + i] * yp[b * n + i];
        auto& rep = partial[ab];
        for (int c = 0; c + a + b <= degree; ++c) {
            const double* zc = zp.data() + c * n;
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                s += t[i] * zc[i];
            const double err = std::abs(s - sphere_monomial_integral(a, b, c));
            ++rep.monomials_checked;
            if (err > rep.max_abs_error) {
                rep.max_abs_error = err;
                rep.worst_monomial = {a, b, c};
            }
        }
    }

    ExactnessReport out;
    out.degree = degree;
    for (const auto& rep : partial) {
        out.monomials_checked += rep.monomials_checked;
        if (rep.max_abs_error > out.monomial_error) {
            out.monomial_error = rep.max_abs_error;
            out.worst_monomial = rep.worst_monomial;
        }
    }

    const int dirs = 2 * degree + 1;
    std::vector<double> zonal(dirs, 0.0);
    std::vector<int> zonal_n(dirs, 0);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
#pragma omp parallel for schedule(static)
    for (int k = 0; k < dirs; ++k) {
        const double z = 1.0 - (2.0 * k + 1.0) / dirs;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const Vec3 a{rho * std::cos(golden * k), rho * std::sin(golden * k), z};
        std::vector<double> sums(d1, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = dot(rule.point(i), a);
            double p_prev = 0.0, p = 1.0;
            sums[0] += w[i];
            for (int m = 1; m <= degree; ++m) {
                const double p_next = ((2 * m - 1) * t * p - (m - 1) * p_prev) / m;
                p_prev = p;
                p = p_next;
                sums[m] += w[i] * p;
            }
        }
        for (int m = 0; m <= degree; ++m) {
            const double err = std::abs(sums[m] - (m == 0 ? 4.0 * std::numbers::pi : 0.0));
            if (err > zonal[k]) {
                zonal[k] = err;
                zonal_n[k] = m;
            }
        }
    }
    for (int k = 0; k < dirs; ++k)
        if (zonal[k] > out.zonal_error) {
            out.zonal_error = zonal[k];
            out.worst_zonal_degree = zonal_n[k];
        }
    out.max_abs_error = std::max(out.monomial_error, out.zonal_error);
    return out;
}

} // namespace rsq
