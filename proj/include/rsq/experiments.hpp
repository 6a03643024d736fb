#ifndef RSQ_EXPERIMENTS_HPP
#define RSQ_EXPERIMENTS_HPP

// Drivers for the three numerical studies: far/near-field accuracy of fitted
// expansions versus evaluation radius, accuracy after translation, and
// convergence of the multi-sphere flow solver. Trials run in parallel, each on
// its own RNG stream (seed, trial), and are reduced in trial order, so the
// output does not depend on the thread count.

#include <cstdint>
#include <vector>

#include "rsq/bem.hpp"
#include "rsq/expansion.hpp"
#include "rsq/io.hpp"
#include "rsq/rng.hpp"

namespace rsq {

/// n charges, positions uniform in center + [-h, h]^3, values uniform in [-1, 1].
/// Draw order per charge: x, y, z, q.
PointCharges random_cube_cloud(Xoshiro256ss& rng, std::size_t n, double half_width, const Vec3& center = {});

/// y -> y / |y|^2 for every position.
PointCharges invert_cloud(const PointCharges& cloud);

/// Expansion rule for order p: the override when non-zero, else rule_for_expansion(p).
RulePtr expansion_rule(int p, int override_order);

struct ReprConfig {
    std::uint64_t seed = 1;
    std::size_t charges = 4000;
    std::size_t trials = 100;
    std::vector<int> orders{3, 6, 9};
    int eval_rule_order = 15;
    int expansion_rule_order = 0;
    /// Outer evaluation radii; the inner study evaluates at 1/r.
    std::vector<double> radii;
};

struct ReprRow {
    ExpansionKind kind;
    int p;
    double r;
    double mean_error;
    /// error * r^(p+1) (outer) or error * r^-p (inner).
    double scaled_prefactor;
    double point_charge_error;
    /// mean |series - point-charge form|
    double series_pc_gap;
};

std::vector<double> default_radii();
std::vector<ReprRow> run_representation_accuracy(const ReprConfig& cfg);

struct ShiftConfig {
    std::uint64_t seed = 1;
    std::size_t charges = 4000;
    std::size_t trials = 100;
    std::vector<int> orders{3, 6, 9};
    int eval_rule_order = 15;
    int expansion_rule_order = 0;
    std::vector<double> outer_shifts{0.2, 0.6, 0.8};
    std::vector<double> inner_shifts{0.1, 0.2, 0.3, 0.4};
};

struct ShiftRow {
    ExpansionKind kind;
    int p;
    double shift;
    double cos_theta;
    /// Translated expansion vs the exact potential.
    double abs_error;
    /// Expansion before translation, evaluated at the same points.
    double unshifted_error;
    /// Expansion fitted directly about the new center and radius.
    double refit_error;
    /// |translated - refitted| potential.
    double route_gap;
};

/// Outer: cube inscribed in the sphere of radius 1-s about (s,0,0), shifted to
/// the unit sphere at the origin, evaluated on |x| = 2.
/// Inner: inverted cube fitted on the unit sphere, shifted to the sphere of
/// radius 1/2-s about (s,0,0), evaluated on that sphere's surface.
std::vector<ShiftRow> run_translation_accuracy(const ShiftConfig& cfg);

struct FlowConfig {
    std::vector<int> orders{2, 3, 4, 5, 6, 7, 8};
    int expansion_rule_order = 0;
    int reference_rule_order = 59;
};

struct FlowRow {
    int p;
    std::size_t sphere;
    double radius;
    double boundary_error;
    double collocation_residual;
    double rcond;
};

struct FlowRun {
    std::vector<FlowRow> rows;
    std::vector<FlowSolution> solutions;
};

std::vector<SphereBoundary> make_boundaries(const std::vector<SceneSphere>& scene, int p, int rule_override = 0);
FlowRun run_flow(const std::vector<SceneSphere>& scene, const FlowConfig& cfg);

} // namespace rsq

#endif // RSQ_EXPERIMENTS_HPP
