#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rsq/error.hpp"
#include "rsq/io.hpp"

using rsq::Vec3;

namespace {

std::string parse_message(auto&& f)
{
    try {
        f();
    } catch (const rsq::ParseError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("expansion round trip is lossless")
{
    std::mt19937_64 g(50);
    for (auto kind : {rsq::ExpansionKind::Outer, rsq::ExpansionKind::Inner}) {
        const auto cloud = oracle::random_cloud(g, 20, 0.5, {2.0, 0, 0});
        const auto e = kind == rsq::ExpansionKind::Outer ? rsq::fit_outer(cloud, {1.9, 0.1, 0}, 1.0, 5)
                                                          : rsq::fit_inner(cloud, {-1, 0, 0}, 1.5, 5);
        std::stringstream ss;
        rsq::write_expansion(ss, e);
        const auto back = rsq::read_expansion(ss);
        CHECK(back.kind() == e.kind());
        CHECK(back.center() == e.center());
        CHECK(back.radius() == e.radius());
        CHECK(back.order() == e.order());
        CHECK(back.rule().same_as(e.rule()));
        for (std::size_t i = 0; i < e.size(); ++i)
            CHECK(back.weight(i) == e.weight(i));
    }
}

TEST_CASE("polytensor, charges and scene round trips")
{
    std::mt19937_64 g(51);
    const auto cloud = oracle::random_cloud(g, 15, 1.0);
    const auto pt = rsq::moments_from_charges(cloud, 5);
    std::stringstream ps;
    rsq::write_polytensor(ps, pt);
    const auto pb = rsq::read_polytensor(ps);
    REQUIRE(pb.order() == pt.order());
    for (int n = 0; n < pt.order(); ++n)
        for (std::size_t k = 0; k < pt.slice(n).size(); ++k)
            CHECK(pb.slice(n).coeffs()[k] == pt.slice(n).coeffs()[k]);

    std::stringstream cs;
    rsq::write_charges(cs, cloud);
    const auto cb = rsq::read_charges(cs);
    REQUIRE(cb.size() == cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        CHECK(cb.positions[i] == cloud.positions[i]);
        CHECK(cb.charges[i] == cloud.charges[i]);
    }

    const std::vector<rsq::SceneSphere> scene{{{-1, 1.5, 0}, 1.0, {1, 0, 0}}, {{4, 0, 0}, 3.0, {-1, 0, 0}}};
    std::stringstream ss;
    rsq::write_scene(ss, scene);
    const auto sb = rsq::read_scene(ss);
    REQUIRE(sb.size() == 2);
    CHECK(sb[1].center == scene[1].center);
    CHECK(sb[1].radius == 3.0);
    CHECK(sb[0].velocity == scene[0].velocity);
}

TEST_CASE("comments and blank lines are skipped")
{
    std::istringstream in("# header\n\n  0 0 0 1   1 0 0\n# trailing\n");
    const auto s = rsq::read_scene(in);
    REQUIRE(s.size() == 1);
    CHECK(s[0].velocity.x == 1.0);
    std::istringstream partial("order 3\n0 0 0 0 2.5\n");
    const auto pt = rsq::read_polytensor(partial);
    CHECK(pt.slice(0)(0, 0, 0) == 2.5);
    CHECK(pt.slice(2)(1, 1, 0) == 0.0);
}

TEST_CASE("parse errors name the line")
{
    std::istringstream bad_scene("# c\n0 0 0 1 1 0 0\n0 0 nope 1 1 0 0\n");
    CHECK(parse_message([&] { rsq::read_scene(bad_scene); }).find("line 3") != std::string::npos);

    std::istringstream short_scene("0 0 0 1 1 0\n");
    CHECK(parse_message([&] { rsq::read_scene(short_scene); }).find("line 1") != std::string::npos);

    std::istringstream neg_radius("0 0 0 -1 1 0 0\n");
    CHECK_THROWS_AS(rsq::read_scene(neg_radius), rsq::ParseError);

    std::istringstream dup("order 2\n1 1 0 0 1\n1 1 0 0 2\n");
    CHECK(parse_message([&] { rsq::read_polytensor(dup); }).find("line 3") != std::string::npos);

    std::istringstream triple("order 3\n2 1 0 0 1\n");
    CHECK(parse_message([&] { rsq::read_polytensor(triple); }).find("line 2") != std::string::npos);

    std::istringstream charges("1 2 3 4\n1 2 3\n");
    CHECK(parse_message([&] { rsq::read_charges(charges); }).find("line 2") != std::string::npos);

    const auto e = rsq::fit_outer(rsq::PointCharges{}, {}, 1.0, 2);
    std::stringstream good;
    rsq::write_expansion(good, e);
    std::string text = good.str();
    text.replace(text.find("kind outer"), 10, "kind sideways");
    std::istringstream bad_kind(text);
    CHECK_THROWS_AS(rsq::read_expansion(bad_kind), rsq::ParseError);

    std::istringstream missing_rule("kind outer\ncenter 0 0 0\nradius 1\norder 2\nrule 4\npoints 6\n");
    CHECK_THROWS_AS(rsq::read_expansion(missing_rule), rsq::ParseError);
    CHECK_THROWS_AS(rsq::read_file("/nonexistent/dir/file.txt"), rsq::ParseError);
}
