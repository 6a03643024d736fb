#ifndef RSQ_TESTS_TENSOR_ORACLES_HPP
#define RSQ_TESTS_TENSOR_ORACLES_HPP

#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "rsq/tensors.hpp"

namespace oracle {

using rsq::TensorSlice;

// Dense 3^n arrays for brute-force index algebra.
struct Full {
    int order;
    std::vector<double> v;

    explicit Full(int n) : order(n), v(static_cast<std::size_t>(std::pow(3, n)), 0.0) {}

    static std::vector<int> digits(std::size_t idx, int n)
    {
        std::vector<int> d(n);
        for (int k = n - 1; k >= 0; --k) {
            d[k] = idx % 3;
            idx /= 3;
        }
        return d;
    }
};

inline Full expand(const TensorSlice& t)
{
    Full f(t.degree());
    for (std::size_t i = 0; i < f.v.size(); ++i) {
        int c[3] = {0, 0, 0};
        for (int d : Full::digits(i, t.degree()))
            ++c[d];
        f.v[i] = t(c[0], c[1], c[2]);
    }
    return f;
}

inline TensorSlice random_slice(std::mt19937_64& g, int n)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TensorSlice t(n);
    for (double& c : t.coeffs())
        c = u(g);
    return t;
}

// S[A (x) B] averaged over every split of the n+m index slots.
inline Full brute_symmetric_product(const Full& a, const Full& b)
{
    const int n = a.order, m = b.order, nm = n + m;
    Full out(nm);
    std::size_t splits = 0;
    for (unsigned mask = 0; mask < (1u << nm); ++mask)
        if (std::popcount(mask) == n)
            ++splits;
    for (std::size_t idx = 0; idx < out.v.size(); ++idx) {
        const auto d = Full::digits(idx, nm);
        double s = 0.0;
        for (unsigned mask = 0; mask < (1u << nm); ++mask) {
            if (std::popcount(mask) != n)
                continue;
            std::size_t ia = 0, ib = 0;
            for (int k = 0; k < nm; ++k) {
                if (mask & (1u << k))
                    ia = ia * 3 + d[k];
                else
                    ib = ib * 3 + d[k];
            }
            s += a.v[ia] * b.v[ib];
        }
        out.v[idx] = s / splits;
    }
    return out;
}

inline double brute_contract(const Full& a, const Full& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i)
        s += a.v[i] * b.v[i];
    return s;
}

inline Full brute_partial(const Full& a, const Full& b)
{
    Full out(b.order - a.order);
    for (std::size_t j = 0; j < out.v.size(); ++j)
        for (std::size_t i = 0; i < a.v.size(); ++i)
            out.v[j] += a.v[i] * b.v[i * out.v.size() + j];
    return out;
}

inline double max_gap(const Full& a, const Full& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i)
        m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}

} // namespace oracle

#endif // RSQ_TESTS_TENSOR_ORACLES_HPP
