#include "rsq/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rsq/error.hpp"

namespace rsq {

namespace {

constexpr double kClampSlack = 1e-12;

void check_order(int p)
{
    if (p < 1)
        throw DomainError("sequence length must be positive, got " + std::to_string(p));
    if (p >= kMaxRecurrenceOrder)
        throw CapacityError("sequence length " + std::to_string(p) + " exceeds the maximum of " +
                            std::to_string(kMaxRecurrenceOrder - 1));
}

} // namespace

double legendre_poly(int n, double t)
{
    if (n < 0)
        throw DomainError("Legendre degree must be non-negative");
    if (!(std::abs(t) <= 1.0 + kClampSlack))
        throw DomainError("Legendre argument " + std::to_string(t) + " outside [-1, 1]");
    t = std::clamp(t, -1.0, 1.0);
    if (n == 0)
        return 1.0;
    double p_prev = 1.0;
    double p = t;
    for (int k = 1; k < n; ++k) {
        const double p_next = ((2 * k + 1) * t * p - k * p_prev) / (k + 1);
        p_prev = p;
        p = p_next;
    }
    return p;
}

LegendreSeq f_sequence(const Vec3& x, const Vec3& y, double alpha, int p)
{
    check_order(p);
    const double yy = norm2(y);
    if (!(yy > 0.0))
        throw SingularityError("recurrence second argument has zero length");

    LegendreSeq seq;
    seq.alpha = alpha;
    seq.values.assign(static_cast<std::size_t>(p), 0.0);
    seq.values[0] = std::pow(yy, 0.5 * alpha);
    const double xx = norm2(x);
    if (xx == 0.0)
        return seq;

    const double s = dot(x, y) / yy;
    const double q = xx / yy;
    if (p > 1)
        seq.values[1] = -alpha * s * seq.values[0];
    for (int n = 2; n < p; ++n) {
        const double a = (2.0 * n - 2.0 - alpha) / n;
        const double b = (alpha + 2.0 - n) / n;
        seq.values[n] = a * s * seq.values[n - 1] + b * q * seq.values[n - 2];
    }
    return seq;
}

LegendreSeq scaled_legendre_seq(const Vec3& x, const Vec3& y, int p)
{
    return f_sequence(x, y, -1.0, p);
}

double kernel_K(const Vec3& x, const Vec3& y, int p)
{
    check_order(p);
    if (!(norm2(y) > 0.0))
        throw SingularityError("kernel second argument has zero length");
    const auto coeffs = reproducing_kernel_coeffs(p);
    return weighted_legendre_sum(x, y, coeffs);
}

std::vector<double> reproducing_kernel_coeffs(int p)
{
    std::vector<double> c(static_cast<std::size_t>(p));
    for (int n = 0; n < p; ++n)
        c[n] = (2.0 * n + 1.0) / (4.0 * std::numbers::pi);
    return c;
}

std::vector<double> unit_coeffs(int p) { return std::vector<double>(static_cast<std::size_t>(p), 1.0); }

} // namespace rsq
