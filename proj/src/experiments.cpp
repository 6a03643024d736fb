#include "rsq/experiments.hpp"

#include <cmath>
#include <exception>

#include "rsq/error.hpp"
#include "rsq/translation.hpp"

namespace rsq {

namespace {

double mean_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += std::abs(a[i] - b[i]);
    return a.empty() ? 0.0 : s / static_cast<double>(a.size());
}

std::vector<Vec3> scaled_points(const QuadratureRule& rule, double radius, const Vec3& center = {})
{
    std::vector<Vec3> pts(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i)
        pts[i] = center + radius * rule.point(i);
    return pts;
}

// Per-trial buffers laid out [quantity][p][radius] and summed in trial order.
template <typename TrialFn>
std::vector<double> reduce_trials(std::size_t trials, std::size_t width, TrialFn&& trial)
{
    std::vector<std::vector<double>> per(trials, std::vector<double>(width, 0.0));
    std::vector<std::exception_ptr> failure(trials);
    const auto n = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t t = 0; t < n; ++t) {
        try {
            trial(static_cast<std::size_t>(t), per[t]);
        } catch (...) {
            failure[t] = std::current_exception();
        }
    }
    for (const auto& f : failure)
        if (f)
            std::rethrow_exception(f);
    std::vector<double> sum(width, 0.0);
    for (const auto& row : per)
        for (std::size_t k = 0; k < width; ++k)
            sum[k] += row[k];
    if (trials > 0)
        for (double& v : sum)
            v /= static_cast<double>(trials);
    return sum;
}

} // namespace

PointCharges random_cube_cloud(Xoshiro256ss& rng, std::size_t n, double half_width, const Vec3& center)
{
    PointCharges pc;
    pc.positions.reserve(n);
    pc.charges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = rng.uniform(-half_width, half_width);
        const double y = rng.uniform(-half_width, half_width);
        const double z = rng.uniform(-half_width, half_width);
        const double q = rng.uniform(-1.0, 1.0);
        pc.add(center + Vec3{x, y, z}, q);
    }
    return pc;
}

PointCharges invert_cloud(const PointCharges& cloud)
{
    PointCharges out = cloud;
    for (auto& y : out.positions) {
        const double r2 = norm2(y);
        if (r2 == 0.0)
            throw SingularityError("cannot invert a source at the origin");
        y = y / r2;
    }
    return out;
}

RulePtr expansion_rule(int p, int override_order)
{
    return override_order > 0 ? lebedev_rule(override_order) : rule_for_expansion(p);
}

std::vector<double> default_radii()
{
    constexpr int count = 14;
    constexpr double lo = 1.25, hi = 30.0;
    std::vector<double> r(count);
    for (int k = 0; k < count; ++k)
        r[k] = lo * std::pow(hi / lo, static_cast<double>(k) / (count - 1));
    return r;
}

std::vector<ReprRow> run_representation_accuracy(const ReprConfig& cfg)
{
    const auto radii = cfg.radii.empty() ? default_radii() : cfg.radii;
    const auto eval = lebedev_rule(cfg.eval_rule_order);
    const std::size_t np = cfg.orders.size(), nr = radii.size();
    std::vector<RulePtr> rules;
    for (int p : cfg.orders)
        rules.push_back(expansion_rule(p, cfg.expansion_rule_order));
    const double h = std::sqrt(3.0) / 3.0;
    const std::size_t block = np * nr;
    auto slot = [&](int quantity, std::size_t ip, std::size_t ir) { return quantity * block + ip * nr + ir; };

    const auto mean = reduce_trials(cfg.trials, 6 * block, [&](std::size_t trial, std::vector<double>& acc) {
        Xoshiro256ss rng(cfg.seed, trial);
        const auto cloud = random_cube_cloud(rng, cfg.charges, h);
        const auto outside = invert_cloud(cloud);
        for (std::size_t ip = 0; ip < np; ++ip) {
            const int p = cfg.orders[ip];
            const auto outer = fit_outer(cloud, {}, 1.0, p, rules[ip]);
            const auto inner = fit_inner(outside, {}, 1.0, p, rules[ip]);
            for (std::size_t ir = 0; ir < nr; ++ir) {
                const auto X = scaled_points(*eval, radii[ir]);
                const auto exact = coulomb_potential(cloud, X);
                const auto series = eval_outer_potential(outer, X);
                const auto pc = eval_point_charge_potential(outer, X);
                acc[slot(0, ip, ir)] = mean_abs_diff(series, exact);
                acc[slot(1, ip, ir)] = mean_abs_diff(pc, exact);
                acc[slot(2, ip, ir)] = mean_abs_diff(series, pc);

                const auto Y = scaled_points(*eval, 1.0 / radii[ir]);
                const auto exact_in = coulomb_potential(outside, Y);
                const auto series_in = eval_inner_potential(inner, Y);
                const auto pc_in = eval_point_charge_potential(inner, Y);
                acc[slot(3, ip, ir)] = mean_abs_diff(series_in, exact_in);
                acc[slot(4, ip, ir)] = mean_abs_diff(pc_in, exact_in);
                acc[slot(5, ip, ir)] = mean_abs_diff(series_in, pc_in);
            }
        }
    });

    std::vector<ReprRow> rows;
    for (int k = 0; k < 2; ++k) {
        const auto kind = k == 0 ? ExpansionKind::Outer : ExpansionKind::Inner;
        for (std::size_t ip = 0; ip < np; ++ip) {
            const int p = cfg.orders[ip];
            for (std::size_t ir = 0; ir < nr; ++ir) {
                // Inner rows run from the smallest radius outward.
                const std::size_t jr = k == 0 ? ir : nr - 1 - ir;
                const double r = k == 0 ? radii[jr] : 1.0 / radii[jr];
                const double err = mean[slot(3 * k, ip, jr)];
                const double scale = k == 0 ? std::pow(r, p + 1) : std::pow(r, -p);
                rows.push_back({kind, p, r, err, err * scale, mean[slot(3 * k + 1, ip, jr)],
                                mean[slot(3 * k + 2, ip, jr)]});
            }
        }
    }
    return rows;
}

std::vector<ShiftRow> run_translation_accuracy(const ShiftConfig& cfg)
{
    const auto eval = lebedev_rule(cfg.eval_rule_order);
    const std::size_t ne = eval->size(), np = cfg.orders.size();
    const std::size_t no = cfg.outer_shifts.size(), ni = cfg.inner_shifts.size();
    std::vector<RulePtr> rules;
    for (int p : cfg.orders)
        rules.push_back(expansion_rule(p, cfg.expansion_rule_order));
    for (double s : cfg.outer_shifts)
        if (!(s >= 0.0 && s < 1.0))
            throw DomainError("outer shifts must lie in [0, 1)");
    for (double s : cfg.inner_shifts)
        if (!(s >= 0.0 && s < 0.5))
            throw DomainError("inner shifts must lie in [0, 1/2)");

    // Layout: [kind-shift case][p][quantity][node]; outer cases first.
    constexpr int quantities = 4;
    const std::size_t per_case = np * quantities * ne;
    auto slot = [&](std::size_t c, std::size_t ip, int quantity, std::size_t e) {
        return c * per_case + (ip * quantities + quantity) * ne + e;
    };
    const auto mean = reduce_trials(cfg.trials, (no + ni) * per_case, [&](std::size_t trial, std::vector<double>& acc) {
        Xoshiro256ss rng(cfg.seed, trial);
        const auto unit = random_cube_cloud(rng, cfg.charges, 1.0);
        auto record = [&](std::size_t c, std::size_t ip, int quantity, const std::vector<double>& v,
                          const std::vector<double>& exact) {
            for (std::size_t e = 0; e < ne; ++e)
                acc[slot(c, ip, quantity, e)] = std::abs(v[e] - exact[e]);
        };

        const auto X = scaled_points(*eval, 2.0);
        for (std::size_t is = 0; is < no; ++is) {
            const double s = cfg.outer_shifts[is];
            const double r0 = 1.0 - s;
            const Vec3 c0{s, 0.0, 0.0};
            PointCharges cloud = unit;
            for (auto& y : cloud.positions)
                y = c0 + (r0 / std::sqrt(3.0)) * y;
            const auto exact = coulomb_potential(cloud, X);
            for (std::size_t ip = 0; ip < np; ++ip) {
                const int p = cfg.orders[ip];
                const auto src = fit_outer(cloud, c0, r0, p, rules[ip]);
                const auto shifted = eval_outer_potential(shift_outer(src, {}, 1.0), X);
                const auto refit = eval_outer_potential(fit_outer(cloud, {}, 1.0, p, rules[ip]), X);
                record(is, ip, 0, shifted, exact);
                record(is, ip, 1, eval_outer_potential(src, X), exact);
                record(is, ip, 2, refit, exact);
                record(is, ip, 3, shifted, refit);
            }
        }

        PointCharges base = unit;
        for (auto& y : base.positions)
            y = (1.0 / std::sqrt(3.0)) * y;
        const auto outside = invert_cloud(base);
        for (std::size_t is = 0; is < ni; ++is) {
            const double s = cfg.inner_shifts[is];
            const double r1 = 0.5 - s;
            const Vec3 c1{s, 0.0, 0.0};
            const auto Y = scaled_points(*eval, r1, c1);
            const auto exact = coulomb_potential(outside, Y);
            for (std::size_t ip = 0; ip < np; ++ip) {
                const int p = cfg.orders[ip];
                const auto src = fit_inner(outside, {}, 1.0, p, rules[ip]);
                const auto shifted = eval_inner_potential(shift_inner(src, c1, r1), Y);
                const auto refit = eval_inner_potential(fit_inner(outside, c1, r1, p, rules[ip]), Y);
                record(no + is, ip, 0, shifted, exact);
                record(no + is, ip, 1, eval_inner_potential(src, Y), exact);
                record(no + is, ip, 2, refit, exact);
                record(no + is, ip, 3, shifted, refit);
            }
        }
    });

    std::vector<ShiftRow> rows;
    for (std::size_t c = 0; c < no + ni; ++c) {
        const bool outer = c < no;
        const double s = outer ? cfg.outer_shifts[c] : cfg.inner_shifts[c - no];
        for (std::size_t ip = 0; ip < np; ++ip)
            for (std::size_t e = 0; e < ne; ++e)
                rows.push_back({outer ? ExpansionKind::Outer : ExpansionKind::Inner, cfg.orders[ip], s,
                                eval->point(e).x, mean[slot(c, ip, 0, e)], mean[slot(c, ip, 1, e)],
                                mean[slot(c, ip, 2, e)], mean[slot(c, ip, 3, e)]});
    }
    return rows;
}

std::vector<SphereBoundary> make_boundaries(const std::vector<SceneSphere>& scene, int p, int rule_override)
{
    std::vector<SphereBoundary> spheres;
    for (const auto& s : scene)
        spheres.push_back(SphereBoundary::make(s.center, s.radius, s.velocity, p, expansion_rule(p, rule_override)));
    return spheres;
}

FlowRun run_flow(const std::vector<SceneSphere>& scene, const FlowConfig& cfg)
{
    const auto reference = lebedev_rule(cfg.reference_rule_order);
    FlowRun run;
    for (int p : cfg.orders) {
        const auto spheres = make_boundaries(scene, p, cfg.expansion_rule_order);
        auto sol = solve_potential_flow(spheres);
        const auto err = boundary_error(sol, spheres, *reference);
        for (std::size_t s = 0; s < spheres.size(); ++s)
            run.rows.push_back({p, s, spheres[s].radius, err[s], sol.residual_report[s], sol.rcond});
        run.solutions.push_back(std::move(sol));
    }
    return run;
}

} // namespace rsq
