#include <limits>

#include "kernel_detail.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsq::kernels::omp {

int max_threads() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void project(SourceSlot slot, std::span<const Vec3> scaled_sources, std::span<const double> charges,
             const QuadratureRule& rule, std::span<const double> coeffs, std::span<double> out)
{
    const auto n = static_cast<std::ptrdiff_t>(rule.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j)
        out[j] = rule.weight(j) * detail::project_one(slot, scaled_sources, charges, rule.point(j), coeffs);
}

void series_sum(SourceSlot slot, std::span<const Vec3> surface, std::span<const double> w,
                std::span<const Vec3> targets, std::span<const double> coeffs, std::span<double> out)
{
    const auto n = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t t = 0; t < n; ++t)
        out[t] = detail::series_one(slot, surface, w, targets[t], coeffs);
}

void series_gradient(std::span<const Vec3> surface, std::span<const double> w, std::span<const Vec3> targets,
                     std::span<const double> coeffs, std::span<Vec3> out)
{
    const auto n = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t t = 0; t < n; ++t)
        out[t] = detail::gradient_one(surface, w, targets[t], coeffs);
}

double coulomb_sum(std::span<const Vec3> sources, std::span<const double> charges, std::span<const Vec3> targets,
                   std::span<double> out)
{
    double dmin = std::numeric_limits<double>::infinity();
    const auto n = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(static) reduction(min : dmin)
    for (std::ptrdiff_t t = 0; t < n; ++t)
        out[t] = detail::coulomb_one(sources, charges, targets[t], dmin);
    return dmin;
}

void normal_flux_block(std::span<const Vec3> surface, std::span<const Vec3> targets, std::span<const Vec3> normals,
                       std::span<const double> coeffs, std::span<double> out)
{
    const std::size_t ns = surface.size();
    const auto n = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < ns; ++j)
            out[k * ns + j] = -dot(normals[k], weighted_legendre_sum_gradient(surface[j], targets[k], coeffs));
}

} // namespace rsq::kernels::omp
