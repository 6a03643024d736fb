// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "rsq/experiments.hpp"
#include "rsq/kernels.hpp"
#include "rsq/legendre.hpp"

namespace k = rsq::kernels;

namespace {

struct Setup {
    int p;
    rsq::RulePtr rule;
    std::vector<rsq::Vec3> sources, targets, surface;
    std::vector<double> charges, weights, coeffs;

    Setup(int order, std::size_t n) : p(order), rule(rsq::rule_for_expansion(order))
    {
        rsq::Xoshiro256ss rng(7);
        const auto cloud = rsq::random_cube_cloud(rng, n, 0.5);
        sources = cloud.positions;
        charges = cloud.charges;
        for (const auto& x : rsq::random_cube_cloud(rng, n, 0.5).positions)
            targets.push_back(x * 10.0 + rsq::Vec3{20, 0, 0});
        surface.assign(rule->points().begin(), rule->points().end());
        weights.assign(rule->weights().begin(), rule->weights().end());
        coeffs = rsq::reproducing_kernel_coeffs(p);
    }
};

template <bool Parallel>
void BM_project(benchmark::State& state)
{
    const Setup s(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    std::vector<double> out(s.rule->size());
    for (auto _ : state) {
        if constexpr (Parallel)
            k::omp::project(k::SourceSlot::First, s.sources, s.charges, *s.rule, s.coeffs, out);
        else
            k::serial::project(k::SourceSlot::First, s.sources, s.charges, *s.rule, s.coeffs, out);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_series_sum(benchmark::State& state)
{
    const Setup s(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    std::vector<double> out(s.targets.size());
    for (auto _ : state) {
        if constexpr (Parallel)
            k::omp::series_sum(k::SourceSlot::First, s.surface, s.weights, s.targets, s.coeffs, out);
        else
            k::serial::series_sum(k::SourceSlot::First, s.surface, s.weights, s.targets, s.coeffs, out);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_coulomb(benchmark::State& state)
{
    const Setup s(2, static_cast<std::size_t>(state.range(1)));
    std::vector<double> out(s.targets.size());
    for (auto _ : state) {
        if constexpr (Parallel)
            benchmark::DoNotOptimize(k::omp::coulomb_sum(s.sources, s.charges, s.targets, out));
        else
            benchmark::DoNotOptimize(k::serial::coulomb_sum(s.sources, s.charges, s.targets, out));
    }
}

template <bool Parallel>
void BM_normal_flux(benchmark::State& state)
{
    const Setup s(static_cast<int>(state.range(0)), 0);
    std::vector<rsq::Vec3> normals(s.surface), targets;
    for (const auto& x : s.surface)
        targets.push_back(x * 1.5);
    std::vector<double> out(targets.size() * s.surface.size());
    const auto coeffs = rsq::unit_coeffs(s.p);
    for (auto _ : state) {
        if constexpr (Parallel)
            k::omp::normal_flux_block(s.surface, targets, normals, coeffs, out);
        else
            k::serial::normal_flux_block(s.surface, targets, normals, coeffs, out);
        benchmark::DoNotOptimize(out.data());
    }
}

void sizes(benchmark::internal::Benchmark* b)
{
    for (int p : {4, 8, 12})
        b->Args({p, 4000});
}

} // namespace

BENCHMARK(BM_project<false>)->Apply(sizes);
BENCHMARK(BM_project<true>)->Apply(sizes);
BENCHMARK(BM_series_sum<false>)->Apply(sizes);
BENCHMARK(BM_series_sum<true>)->Apply(sizes);
BENCHMARK(BM_coulomb<false>)->Args({0, 4000});
BENCHMARK(BM_coulomb<true>)->Args({0, 4000});
BENCHMARK(BM_normal_flux<false>)->Arg(4)->Arg(8);
BENCHMARK(BM_normal_flux<true>)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
