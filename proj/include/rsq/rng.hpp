#ifndef RSQ_RNG_HPP
#define RSQ_RNG_HPP

// xoshiro256** (Blackman & Vigna) seeded through splitmix64.
//
// Stream k of seed s: a splitmix64 generator started at
// s ^ (0xD1B54A32D192ED03 * (k + 1)) yields the four state words in order.
// uniform01() = (next() >> 11) * 2^-53, uniform(a, b) = a + (b - a) * uniform01().

#include <array>
#include <cstdint>
#include <limits>

namespace rsq {

class Xoshiro256ss {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256ss(std::uint64_t seed, std::uint64_t stream = 0) noexcept
    {
        std::uint64_t sm = seed ^ (0xD1B54A32D192ED03ull * (stream + 1));
        for (auto& word : s_)
            word = splitmix64(sm);
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return next(); }

    result_type next() noexcept
    {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) noexcept { return a + (b - a) * uniform01(); }

    static std::uint64_t splitmix64(std::uint64_t& state) noexcept
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> s_{};
};

} // namespace rsq

#endif // RSQ_RNG_HPP
