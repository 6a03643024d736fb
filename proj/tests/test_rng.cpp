#include <doctest.h>

#include "rsq/rng.hpp"

using rsq::Xoshiro256ss;

TEST_CASE("splitmix64 reference output")
{
    std::uint64_t state = 0;
    CHECK(Xoshiro256ss::splitmix64(state) == 0xE220A8397B1DCDAFull);
}

TEST_CASE("xoshiro256** reference streams")
{
    Xoshiro256ss a(42, 0);
    CHECK(a.next() == 0x0030425E2A3DC334ull);
    CHECK(a.next() == 0x057E19F0156C8A6Bull);
    CHECK(a.next() == 0x8C5C18F37D24DFD8ull);

    Xoshiro256ss b(42, 1);
    CHECK(b.next() == 0xF4AA51180A7FDF56ull);
    CHECK(b.next() == 0xBE2E5718A3BAB79Bull);

    Xoshiro256ss c(0);
    CHECK(c() == 0x3A4BB92775CC364Dull);
}

TEST_CASE("uniform draws")
{
    Xoshiro256ss r(7, 3), s(7, 3);
    double lo = 1.0, hi = 0.0, mean = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = r.uniform01();
        CHECK_EQ(u, s.uniform01());
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        mean += u;
    }
    CHECK(lo >= 0.0);
    CHECK(hi < 1.0);
    CHECK(mean / n == doctest::Approx(0.5).epsilon(0.01));

    Xoshiro256ss t(9);
    for (int i = 0; i < 1000; ++i) {
        const double v = t.uniform(-2.0, 3.0);
        CHECK(v >= -2.0);
        CHECK(v < 3.0);
    }
}
