#include <doctest.h>

#include <omp.h>

#include "rsq/error.hpp"
#include "rsq/experiments.hpp"

using rsq::Vec3;

TEST_CASE("random cube cloud")
{
    rsq::Xoshiro256ss a(5, 2), b(5, 2);
    const auto c = rsq::random_cube_cloud(a, 200, 0.5, {1, 2, 3});
    REQUIRE(c.size() == 200);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Vec3 d = c.positions[i] - Vec3{1, 2, 3};
        CHECK(std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z)}) <= 0.5);
        CHECK(std::abs(c.charges[i]) <= 1.0);
    }
    const Vec3 first{b.uniform(0.5, 1.5), b.uniform(1.5, 2.5), b.uniform(2.5, 3.5)};
    CHECK(first == c.positions[0]);
    CHECK(b.uniform(-1, 1) == c.charges[0]);

    const auto inv = rsq::invert_cloud(c);
    for (std::size_t i = 0; i < c.size(); ++i)
        CHECK(rsq::norm(inv.positions[i]) * rsq::norm(c.positions[i]) == doctest::Approx(1.0));
}

TEST_CASE("default radii")
{
    const auto r = rsq::default_radii();
    REQUIRE(r.size() == 14);
    CHECK(r.front() == doctest::Approx(1.25));
    CHECK(r.back() == doctest::Approx(30.0));
    for (std::size_t i = 1; i < r.size(); ++i)
        CHECK(r[i] / r[i - 1] == doctest::Approx(r[1] / r[0]));
}

TEST_CASE("studies do not depend on the thread count")
{
    rsq::ReprConfig rc;
    rc.seed = 11;
    rc.charges = 60;
    rc.trials = 6;
    rc.orders = {3, 5};
    rc.radii = {2.0, 5.0};
    rsq::ShiftConfig sc;
    sc.seed = 12;
    sc.charges = 40;
    sc.trials = 5;
    sc.orders = {4};

    omp_set_num_threads(1);
    const auto r1 = rsq::run_representation_accuracy(rc);
    const auto s1 = rsq::run_translation_accuracy(sc);
    omp_set_num_threads(4);
    const auto r4 = rsq::run_representation_accuracy(rc);
    const auto s4 = rsq::run_translation_accuracy(sc);

    REQUIRE(r1.size() == r4.size());
    CHECK(r1.size() == 2 * 2 * 2);
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].mean_error == r4[i].mean_error);
        CHECK(r1[i].point_charge_error == r4[i].point_charge_error);
        CHECK(r1[i].series_pc_gap == r4[i].series_pc_gap);
    }
    REQUIRE(s1.size() == s4.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
        CHECK(s1[i].abs_error == s4[i].abs_error);
        CHECK(s1[i].refit_error == s4[i].refit_error);
    }

    rc.seed = 13;
    const auto other = rsq::run_representation_accuracy(rc);
    CHECK(other[0].mean_error != r1[0].mean_error);
}

TEST_CASE("no charges means no error")
{
    rsq::ReprConfig rc;
    rc.charges = 0;
    rc.trials = 2;
    rc.orders = {3};
    rc.radii = {2.0};
    for (const auto& row : rsq::run_representation_accuracy(rc)) {
        CHECK(row.mean_error == 0.0);
        CHECK(row.series_pc_gap == 0.0);
    }
}

TEST_CASE("representation rows")
{
    rsq::ReprConfig rc;
    rc.charges = 50;
    rc.trials = 3;
    rc.orders = {4};
    rc.radii = {3.0, 10.0};
    const auto rows = rsq::run_representation_accuracy(rc);
    for (const auto& row : rows) {
        const double scale = row.kind == rsq::ExpansionKind::Outer ? std::pow(row.r, row.p + 1) : std::pow(row.r, -row.p);
        CHECK(row.scaled_prefactor == doctest::Approx(row.mean_error * scale));
        if (row.kind == rsq::ExpansionKind::Inner)
            CHECK(row.r < 1.0);
    }
}

TEST_CASE("flow study")
{
    const std::vector<rsq::SceneSphere> one{{{}, 1.0, {1, 0, 0}}};
    rsq::FlowConfig fc;
    fc.orders = {2, 3};
    const auto run = rsq::run_flow(one, fc);
    REQUIRE(run.rows.size() == 2);
    REQUIRE(run.solutions.size() == 2);
    for (const auto& row : run.rows)
        CHECK(row.boundary_error <= 1e-8);

    const auto b = rsq::make_boundaries(one, 5, 21);
    CHECK(b[0].rule->exactness_degree() == 21);
    CHECK(b[0].order == 5);

    const std::vector<rsq::SceneSphere> overlap{{{}, 1.0, {}}, {{1.5, 0, 0}, 1.0, {}}};
    CHECK_THROWS_AS(rsq::run_flow(overlap, fc), rsq::GeometryError);
}
