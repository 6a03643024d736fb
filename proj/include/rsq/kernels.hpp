#ifndef RSQ_KERNELS_HPP
#define RSQ_KERNELS_HPP

// Data-parallel inner loops shared by every module. Each kernel exists twice:
// a plain serial reference and an OpenMP version that partitions the output
// index across threads. Both run the identical per-element arithmetic in the
// identical order, so their results agree bitwise.
//
// Contracts (coeffs has one entry per retained order n < p):
//
//   project            out[j] = w0_j sum_s q_s sum_n c_n L_n(u_s, r_j)    slot First
//                      out[j] = w0_j sum_s q_s sum_n c_n L_n(r_j, u_s)    slot Second
//   series_sum         out[t] = sum_i w_i sum_n c_n L_n(a_i, x_t)         slot First
//                      out[t] = sum_i w_i sum_n c_n L_n(x_t, a_i)         slot Second
//   series_gradient    out[t] = grad_x sum_i w_i sum_n c_n L_n(a_i, x) at x_t
//   coulomb_sum        out[t] = sum_s q_s / |x_t - y_s|, returns the smallest distance met
//   normal_flux_block  out[k * surface.size() + j] = -n_k . grad_x sum_n c_n L_n(a_j, x) at x_k

#include <span>

#include "rsq/quadrature.hpp"
#include "rsq/vec3.hpp"

namespace rsq::kernels {

/// Which argument of L_n / K receives the source (surface) point.
enum class SourceSlot { First, Second };

namespace serial {

void project(SourceSlot slot, std::span<const Vec3> scaled_sources, std::span<const double> charges,
             const QuadratureRule& rule, std::span<const double> coeffs, std::span<double> out);
void series_sum(SourceSlot slot, std::span<const Vec3> surface, std::span<const double> w,
                std::span<const Vec3> targets, std::span<const double> coeffs, std::span<double> out);
void series_gradient(std::span<const Vec3> surface, std::span<const double> w, std::span<const Vec3> targets,
                     std::span<const double> coeffs, std::span<Vec3> out);
double coulomb_sum(std::span<const Vec3> sources, std::span<const double> charges, std::span<const Vec3> targets,
                   std::span<double> out);
void normal_flux_block(std::span<const Vec3> surface, std::span<const Vec3> targets, std::span<const Vec3> normals,
                       std::span<const double> coeffs, std::span<double> out);

} // namespace serial

namespace omp {

void project(SourceSlot slot, std::span<const Vec3> scaled_sources, std::span<const double> charges,
             const QuadratureRule& rule, std::span<const double> coeffs, std::span<double> out);
void series_sum(SourceSlot slot, std::span<const Vec3> surface, std::span<const double> w,
                std::span<const Vec3> targets, std::span<const double> coeffs, std::span<double> out);
void series_gradient(std::span<const Vec3> surface, std::span<const double> w, std::span<const Vec3> targets,
                     std::span<const double> coeffs, std::span<Vec3> out);
double coulomb_sum(std::span<const Vec3> sources, std::span<const double> charges, std::span<const Vec3> targets,
                   std::span<double> out);
void normal_flux_block(std::span<const Vec3> surface, std::span<const Vec3> targets, std::span<const Vec3> normals,
                       std::span<const double> coeffs, std::span<double> out);

/// Worker count the OpenMP runtime will use.
int max_threads() noexcept;

} // namespace omp

} // namespace rsq::kernels

#endif // RSQ_KERNELS_HPP
