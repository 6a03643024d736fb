#ifndef RSQ_VEC3_HPP
#define RSQ_VEC3_HPP

#include <cmath>
#include <ostream>

namespace rsq {

/// Cartesian 3-vector. Everything in the library is phrased through inner
/// products of these; no angular coordinates are ever formed.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3& operator+=(const Vec3& o) noexcept
    {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) noexcept
    {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Vec3& operator*=(double s) noexcept
    {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) noexcept { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) noexcept { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) noexcept { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(Vec3 a, double s) noexcept { return a *= s; }
constexpr Vec3 operator*(double s, Vec3 a) noexcept { return a *= s; }
constexpr Vec3 operator/(Vec3 a, double s) noexcept { return a *= (1.0 / s); }

constexpr double dot(const Vec3& a, const Vec3& b) noexcept
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr double norm2(const Vec3& a) noexcept { return dot(a, a); }

inline double norm(const Vec3& a) noexcept { return std::sqrt(norm2(a)); }

inline double distance(const Vec3& a, const Vec3& b) noexcept { return norm(a - b); }

inline Vec3 normalized(const Vec3& a) noexcept { return a / norm(a); }

inline std::ostream& operator<<(std::ostream& os, const Vec3& v)
{
    return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

} // namespace rsq

#endif // RSQ_VEC3_HPP
