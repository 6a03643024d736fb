#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rsq/error.hpp"
#include "rsq/legendre.hpp"

using rsq::Vec3;

TEST_CASE("legendre_poly values")
{
    CHECK(rsq::legendre_poly(0, 0.3) == 1.0);
    CHECK(rsq::legendre_poly(2, 1.0) == 1.0);
    CHECK(rsq::legendre_poly(2, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
    for (int n = 0; n < 60; ++n)
        CHECK(rsq::legendre_poly(n, 1.0) == 1.0);
    for (int n = 0; n < 30; ++n)
        for (double t : {-0.9, -0.3, 0.1, 0.77})
            CHECK(rsq::legendre_poly(n, t) == doctest::Approx(oracle::legendre(n, t)).epsilon(1e-12));
}

TEST_CASE("legendre_poly domain")
{
    CHECK(rsq::legendre_poly(3, 1.0 + 5e-13) == doctest::Approx(1.0));
    CHECK_THROWS_AS(rsq::legendre_poly(3, 1.0 + 1e-9), rsq::DomainError);
    CHECK_THROWS_AS(rsq::legendre_poly(-1, 0.0), rsq::DomainError);
}

TEST_CASE("f_sequence examples")
{
    auto s = rsq::f_sequence({1, 0, 0}, {0, 0, 2}, -1.0, 1);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == doctest::Approx(0.5));
    CHECK(s.alpha == -1.0);

    s = rsq::f_sequence({1, 0, 0}, {2, 0, 0}, -1.0, 2);
    CHECK(s[0] == doctest::Approx(0.5));
    CHECK(s[1] == doctest::Approx(0.25));

    s = rsq::f_sequence({1, 0, 0}, {0, 0, 2}, -1.0, 3);
    CHECK(s[0] == doctest::Approx(0.5));
    CHECK(std::abs(s[1]) < 1e-16);
    CHECK(s[2] == doctest::Approx(-0.0625));

    CHECK_THROWS_AS(rsq::f_sequence({1, 0, 0}, {0, 0, 0}, -1.0, 3), rsq::SingularityError);
    CHECK_THROWS_AS(rsq::f_sequence({1, 0, 0}, {1, 0, 0}, -1.0, 0), rsq::DomainError);
}

TEST_CASE("f_sequence general alpha matches derivatives of |y|^alpha")
{
    // F_n = (-x.d_y)^n |y|^alpha / n!; check n = 1, 2 against finite differences along x.
    const Vec3 x{0.3, -0.2, 0.5}, y{1.1, 0.4, -0.7};
    for (double alpha : {-3.0, -1.0, 0.5, 2.0}) {
        const auto s = rsq::f_sequence(x, y, alpha, 3);
        auto g = [&](double t) { return std::pow(rsq::norm(y - t * x), alpha); };
        const double h = 1e-4;
        CHECK(s[0] == doctest::Approx(g(0.0)).epsilon(1e-14));
        CHECK(s[1] == doctest::Approx((g(h) - g(-h)) / (2 * h)).epsilon(1e-7));
        CHECK(s[2] == doctest::Approx((g(h) - 2 * g(0.0) + g(-h)) / (2 * h * h)).epsilon(1e-5));
    }
}

TEST_CASE("scaled_legendre_seq")
{
    const auto z = rsq::scaled_legendre_seq({0, 0, 0}, {0, 3, 4}, 2);
    CHECK(z[0] == doctest::Approx(0.2));
    CHECK(z[1] == 0.0);

    const Vec3 x{0.3, 0.1, -0.2}, y{1.5, 0.5, 2.0};
    const auto s = rsq::scaled_legendre_seq(x, y, 6);
    const auto f = rsq::f_sequence(x, y, -1.0, 6);
    for (int n = 0; n < 6; ++n) {
        CHECK(s[n] == f[n]);
        CHECK(oracle::rel_err(s[n], oracle::scaled_legendre(n, x, y)) < 1e-12);
    }
}

TEST_CASE("route equivalence on random pairs")
{
    std::mt19937_64 g(11);
    std::uniform_real_distribution<double> r(0.1, 10.0);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const Vec3 x = r(g) * oracle::random_unit(g);
        const Vec3 y = r(g) * oracle::random_unit(g);
        const auto s = rsq::scaled_legendre_seq(x, y, 16);
        for (int n = 0; n < 16; ++n) {
            const double want = oracle::scaled_legendre(n, x, y);
            // terms near a zero of P_n carry cancellation; compare against the term scale
            const double scale = std::pow(rsq::norm(x), n) / std::pow(rsq::norm(y), n + 1);
            worst = std::max(worst, std::abs(s[n] - want) / scale);
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("exchange symmetry")
{
    std::mt19937_64 g(3);
    for (int k = 0; k < 200; ++k) {
        const Vec3 x = oracle::random_in_ball(g, 3.0), y = oracle::random_in_ball(g, 3.0);
        const auto a = rsq::scaled_legendre_seq(x, y, 10);
        const auto b = rsq::scaled_legendre_seq(y, x, 10);
        for (int n = 0; n < 10; ++n) {
            const double lhs = a[n] * std::pow(rsq::norm(y), 2 * n + 1);
            const double rhs = b[n] * std::pow(rsq::norm(x), 2 * n + 1);
            CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(lhs)) * std::pow(3.0, n));
        }
    }
}

TEST_CASE("partial sums converge to the Coulomb kernel")
{
    const Vec3 x{0.2, -0.3, 0.1}, y{1.0, 0.5, -0.4};
    const double ratio = rsq::norm(x) / rsq::norm(y);
    const double exact = 1.0 / rsq::distance(x, y);
    const auto s = rsq::scaled_legendre_seq(x, y, 40);
    double sum = 0.0;
    for (int p = 1; p <= 40; ++p) {
        sum += s[p - 1];
        CHECK(std::abs(sum - exact) <= 2.0 * std::pow(ratio, p) / (1.0 - ratio) / rsq::norm(y) + 1e-15);
    }
}

TEST_CASE("kernel_K")
{
    const Vec3 a = Vec3{1, 2, 2} / 3.0, b{0, 0, 1};
    CHECK(rsq::kernel_K(a, b, 1) == doctest::Approx(1.0 / (4 * std::numbers::pi)));
    const double t = rsq::dot(a, b);
    CHECK(rsq::kernel_K(a, b, 2) == doctest::Approx((1 + 3 * t) / (4 * std::numbers::pi)).epsilon(1e-14));

    const Vec3 x{0.5, 0, 0}, y{0, 1, 0};
    const auto s = rsq::scaled_legendre_seq(x, y, 3);
    double want = 0;
    for (int n = 0; n < 3; ++n)
        want += (2 * n + 1) / (4 * std::numbers::pi) * s[n];
    CHECK(rsq::kernel_K(x, y, 3) == doctest::Approx(want).epsilon(1e-15));
    CHECK_THROWS_AS(rsq::kernel_K(x, {0, 0, 0}, 3), rsq::SingularityError);
}

TEST_CASE("weighted sum gradient matches finite differences")
{
    std::mt19937_64 g(5);
    const auto coeffs = rsq::unit_coeffs(9);
    for (int k = 0; k < 100; ++k) {
        const Vec3 a = oracle::random_in_ball(g, 1.0);
        const Vec3 x = (1.5 + 3.0 * std::uniform_real_distribution<double>(0, 1)(g)) * oracle::random_unit(g);
        const Vec3 grad = rsq::weighted_legendre_sum_gradient(a, x, coeffs);
        const double h = 1e-5 * rsq::norm(x);
        for (int d = 0; d < 3; ++d) {
            Vec3 e{};
            (d == 0 ? e.x : d == 1 ? e.y : e.z) = h;
            const double fd = (rsq::weighted_legendre_sum(a, x + e, coeffs) -
                               rsq::weighted_legendre_sum(a, x - e, coeffs)) / (2 * h);
            const double gd = d == 0 ? grad.x : d == 1 ? grad.y : grad.z;
            CHECK(std::abs(gd - fd) <= 1e-6 * rsq::norm(grad) + 1e-12);
        }
    }
}
