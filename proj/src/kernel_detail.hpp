#ifndef RSQ_SRC_KERNEL_DETAIL_HPP
#define RSQ_SRC_KERNEL_DETAIL_HPP

// Per-output-element bodies shared by kernels_serial.cpp and kernels_omp.cpp.

#include <cmath>
#include <span>

#include "rsq/kernels.hpp"
#include "rsq/legendre.hpp"

namespace rsq::kernels::detail {

inline double project_one(SourceSlot slot, std::span<const Vec3> src, std::span<const double> q,
                          const Vec3& node, std::span<const double> coeffs) noexcept
{
    double s = 0.0;
    if (slot == SourceSlot::First) {
        for (std::size_t k = 0; k < src.size(); ++k)
            s += q[k] * weighted_legendre_sum(src[k], node, coeffs);
    } else {
        for (std::size_t k = 0; k < src.size(); ++k)
            s += q[k] * weighted_legendre_sum(node, src[k], coeffs);
    }
    return s;
}

inline double series_one(SourceSlot slot, std::span<const Vec3> surface, std::span<const double> w,
                         const Vec3& target, std::span<const double> coeffs) noexcept
{
    double s = 0.0;
    if (slot == SourceSlot::First) {
        for (std::size_t i = 0; i < surface.size(); ++i)
            s += w[i] * weighted_legendre_sum(surface[i], target, coeffs);
    } else {
        for (std::size_t i = 0; i < surface.size(); ++i)
            s += w[i] * weighted_legendre_sum(target, surface[i], coeffs);
    }
    return s;
}

inline Vec3 gradient_one(std::span<const Vec3> surface, std::span<const double> w,
                         const Vec3& target, std::span<const double> coeffs) noexcept
{
    Vec3 g{};
    for (std::size_t i = 0; i < surface.size(); ++i)
        g += w[i] * weighted_legendre_sum_gradient(surface[i], target, coeffs);
    return g;
}

inline double coulomb_one(std::span<const Vec3> src, std::span<const double> q, const Vec3& target,
                          double& dmin) noexcept
{
    double s = 0.0;
    for (std::size_t k = 0; k < src.size(); ++k) {
        const double d = distance(target, src[k]);
        dmin = std::fmin(dmin, d);
        s += q[k] / d;
    }
    return s;
}

} // namespace rsq::kernels::detail

#endif // RSQ_SRC_KERNEL_DETAIL_HPP
