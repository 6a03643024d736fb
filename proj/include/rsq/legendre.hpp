#ifndef RSQ_LEGENDRE_HPP
#define RSQ_LEGENDRE_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "rsq/vec3.hpp"

namespace rsq {

/// F_0 .. F_{p-1} for one argument pair (x, y), generated by the two-term
/// recurrence in the inner products x.x, x.y, y.y. With alpha = -1 these
/// are the scaled Legendre functions L_n(x, y) = |x|^n / |y|^(n+1) P_n.
struct LegendreSeq {
    std::vector<double> values;
    double alpha = -1.0;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t n) const noexcept { return values[n]; }
};

/// Largest order for which the inline recurrence tables below are laid out.
inline constexpr int kMaxRecurrenceOrder = 160;

/// P_n(t) by the three-term recurrence. |t| may exceed 1 by at most 1e-12
/// (it is clamped); anything further out throws DomainError.
double legendre_poly(int n, double t);

/// General-alpha sequence F_n(x, y; alpha) = (-x.d_y)^n |y|^alpha / n!.
/// Throws SingularityError when |y| = 0.
LegendreSeq f_sequence(const Vec3& x, const Vec3& y, double alpha, int p);

/// L_0 .. L_{p-1}(x, y); same as f_sequence(x, y, -1, p).
LegendreSeq scaled_legendre_seq(const Vec3& x, const Vec3& y, int p);

/// Reproducing kernel K(x, y) = sum_{n<p} (2n+1)/(4 pi) L_n(x, y).
double kernel_K(const Vec3& x, const Vec3& y, int p);

/// Per-order coefficients (2n+1)/(4 pi), n < p.
std::vector<double> reproducing_kernel_coeffs(int p);

/// Per-order coefficients all equal to one, n < p (plain potential).
std::vector<double> unit_coeffs(int p);

namespace detail {

struct RecurrenceTable {
    std::array<double, kMaxRecurrenceOrder> a{};   // (2n-1)/n
    std::array<double, kMaxRecurrenceOrder> b{};   // (1-n)/n
    constexpr RecurrenceTable()
    {
        for (int n = 1; n < kMaxRecurrenceOrder; ++n) {
            a[n] = double(2 * n - 1) / n;
            b[n] = double(1 - n) / n;
        }
    }
};

inline constexpr RecurrenceTable kCoulombRecurrence{};

} // namespace detail

/// sum_n coeffs[n] * L_n(x, y). Hot path of every kernel in the library;
/// the caller guarantees y != 0 and coeffs.size() < kMaxRecurrenceOrder.
inline double weighted_legendre_sum(const Vec3& x, const Vec3& y,
                                    std::span<const double> coeffs) noexcept
{
    const auto& tab = detail::kCoulombRecurrence;
    const double inv_yy = 1.0 / norm2(y);
    const double s = dot(x, y) * inv_yy;
    const double q = norm2(x) * inv_yy;
    double f_prev = 0.0;
    double f = std::sqrt(inv_yy);
    double sum = coeffs[0] * f;
    const std::size_t p = coeffs.size();
    for (std::size_t n = 1; n < p; ++n) {
        const double f_next = tab.a[n] * s * f + tab.b[n] * q * f_prev;
        f_prev = f;
        f = f_next;
        sum += coeffs[n] * f;
    }
    return sum;
}

/// Gradient with respect to y of sum_n coeffs[n] * L_n(x, y), obtained by
/// differentiating the recurrence term by term.
inline Vec3 weighted_legendre_sum_gradient(const Vec3& x, const Vec3& y,
                                           std::span<const double> coeffs) noexcept
{
    const auto& tab = detail::kCoulombRecurrence;
    const double inv_yy = 1.0 / norm2(y);
    const double s = dot(x, y) * inv_yy;
    const double q = norm2(x) * inv_yy;
    const Vec3 grad_s = (x - (2.0 * s) * y) * inv_yy;
    const Vec3 grad_q = y * (-2.0 * q * inv_yy);

    double f_prev = 0.0;
    double f = std::sqrt(inv_yy);
    Vec3 g_prev{};
    Vec3 g = y * (-f * inv_yy);
    Vec3 sum = coeffs[0] * g;
    const std::size_t p = coeffs.size();
    for (std::size_t n = 1; n < p; ++n) {
        const double a = tab.a[n];
        const double b = tab.b[n];
        const double f_next = a * s * f + b * q * f_prev;
        const Vec3 g_next = a * (f * grad_s + s * g) + b * (f_prev * grad_q + q * g_prev);
        f_prev = f;
        f = f_next;
        g_prev = g;
        g = g_next;
        sum += coeffs[n] * g;
    }
    return sum;
}

} // namespace rsq

#endif // RSQ_LEGENDRE_HPP
