#ifndef RSQ_TESTS_ORACLES_HPP
#define RSQ_TESTS_ORACLES_HPP

// Test-side reference computations. None of these call into the library's
// numerical code; they are the independent routes the library is checked against.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "rsq/expansion.hpp"
#include "rsq/vec3.hpp"

namespace oracle {

using rsq::Vec3;

inline double legendre(int n, double t)
{
    return std::legendre(static_cast<unsigned>(n), std::clamp(t, -1.0, 1.0));
}

/// |x|^n / |y|^(n+1) P_n(cos angle) in closed form.
inline double scaled_legendre(int n, const Vec3& x, const Vec3& y)
{
    const double nx = rsq::norm(x), ny = rsq::norm(y);
    if (nx == 0.0)
        return n == 0 ? 1.0 / ny : 0.0;
    return std::pow(nx, n) / std::pow(ny, n + 1) * legendre(n, rsq::dot(x, y) / (nx * ny));
}

inline double coulomb(const rsq::PointCharges& pc, const Vec3& x)
{
    double s = 0.0;
    for (std::size_t i = 0; i < pc.size(); ++i)
        s += pc.charges[i] / rsq::distance(x, pc.positions[i]);
    return s;
}

inline double coulomb_energy(const rsq::PointCharges& a, const rsq::PointCharges& b)
{
    double e = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        e += a.charges[i] * coulomb(b, a.positions[i]);
    return e;
}

/// 4 pi prod (e-1)!! / (a+b+c+1)!! via Gamma functions.
inline double sphere_monomial(int a, int b, int c)
{
    if (a % 2 || b % 2 || c % 2)
        return 0.0;
    return 2.0 * std::exp(std::lgamma((a + 1) / 2.0) + std::lgamma((b + 1) / 2.0) + std::lgamma((c + 1) / 2.0) -
                          std::lgamma((a + b + c + 3) / 2.0));
}

inline Vec3 random_unit(std::mt19937_64& g)
{
    std::normal_distribution<double> n;
    Vec3 v{n(g), n(g), n(g)};
    return v / rsq::norm(v);
}

inline Vec3 random_in_ball(std::mt19937_64& g, double radius)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return radius * std::cbrt(u(g)) * random_unit(g);
}

inline rsq::PointCharges random_cloud(std::mt19937_64& g, std::size_t n, double radius, const Vec3& center = {})
{
    std::uniform_real_distribution<double> q(-1.0, 1.0);
    rsq::PointCharges pc;
    for (std::size_t i = 0; i < n; ++i)
        pc.add(center + random_in_ball(g, radius), q(g));
    return pc;
}

/// A random spherical polynomial of degree < p: sum_k c_k P_{n_k}(r . a_k).
struct SpherePoly {
    std::vector<int> degree;
    std::vector<Vec3> axis;
    std::vector<double> coeff;

    double operator()(const Vec3& r_hat) const
    {
        double s = 0.0;
        for (std::size_t k = 0; k < coeff.size(); ++k)
            s += coeff[k] * legendre(degree[k], rsq::dot(r_hat, axis[k]));
        return s;
    }
};

inline SpherePoly random_sphere_poly(std::mt19937_64& g, int p, int terms = 8)
{
    std::uniform_int_distribution<int> deg(0, p - 1);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    SpherePoly sp;
    for (int k = 0; k < terms; ++k) {
        sp.degree.push_back(k == 0 ? p - 1 : deg(g));
        sp.axis.push_back(random_unit(g));
        sp.coeff.push_back(c(g));
    }
    return sp;
}

inline double rel_err(double got, double want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace oracle

#endif // RSQ_TESTS_ORACLES_HPP
