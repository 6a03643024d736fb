// rsq: experiment harness and format converter.
//
// Exit codes: 0 success, 2 invalid configuration or unreadable input,
// 3 numerical failure (singular geometry, ill-conditioned solve).

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsq/error.hpp"
#include "rsq/experiments.hpp"
#include "rsq/io.hpp"
#include "rsq/quadrature.hpp"
#include "rsq/tensors.hpp"
#include "rsq/version.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kNumericError = 3;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <typename T>
std::string join(const std::vector<T>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        if constexpr (std::is_floating_point_v<T>)
            s += num(v[i]);
        else
            s += std::to_string(v[i]);
    }
    return s;
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-")
        std::cout << text << std::flush;
    else
        rsq::write_file(path, text);
}

int exit_code_for(const rsq::Error& e)
{
    const bool config = dynamic_cast<const rsq::ParseError*>(&e) || dynamic_cast<const rsq::DomainError*>(&e) ||
                        dynamic_cast<const rsq::LookupError*>(&e) || dynamic_cast<const rsq::CapacityError*>(&e) ||
                        dynamic_cast<const rsq::GeometryError*>(&e);
    return config ? kConfigError : kNumericError;
}

// Orders on the command line are either p directly or the highest retained degree p-1.
std::vector<int> to_expansion_orders(const std::vector<int>& given, const std::string& interpretation)
{
    std::vector<int> p;
    for (int o : given) {
        const int order = interpretation == "p" ? o : o + 1;
        if (order < 1)
            throw rsq::DomainError("expansion order must be at least 1 (got " + std::to_string(o) + " as " +
                                   interpretation + ")");
        p.push_back(order);
    }
    return p;
}

void check_rule_choice(const std::vector<int>& orders, int expansion_rule)
{
    if (expansion_rule == 0)
        return;
    const auto rule = rsq::lebedev_rule(expansion_rule);
    for (int p : orders)
        if (rule->exactness_degree() < 2 * p - 2)
            throw rsq::DomainError("rule order " + std::to_string(expansion_rule) + " is too low for p = " +
                                   std::to_string(p));
}

struct Common {
    std::uint64_t seed = 1;
    std::size_t charges = 4000;
    std::size_t trials = 100;
    std::vector<int> orders{2, 5, 8};
    std::string interpretation = "p-1";
    int rule_order = 15;
    int expansion_rule = 0;
    std::string out;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--charges", c.charges, "charges per trial")->capture_default_str()->check(CLI::NonNegativeNumber);
    cmd->add_option("--trials", c.trials, "number of trials")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--orders", c.orders, "expansion orders, read per --interpretation")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--interpretation", c.interpretation, "orders are p or the highest degree p-1")
        ->check(CLI::IsMember({"p", "p-1"}))
        ->capture_default_str();
    cmd->add_option("--rule-order", c.rule_order, "Lebedev order of the evaluation grid")->capture_default_str();
    cmd->add_option("--expansion-rule", c.expansion_rule, "Lebedev order carrying the expansions (0: smallest adequate)")
        ->capture_default_str();
    cmd->add_option("--out", c.out, "output CSV (default stdout)");
}

std::string config_line(const std::string& command, const Common& c, const std::vector<int>& p,
                        const std::string& extra)
{
    return "# rsq " + std::string(rsq::kVersion) + " " + command + " seed=" + std::to_string(c.seed) +
           " charges=" + std::to_string(c.charges) + " trials=" + std::to_string(c.trials) + " p=" + join(p) +
           " interpretation=" + c.interpretation + " rule_order=" + std::to_string(c.rule_order) +
           " expansion_rule=" + (c.expansion_rule ? std::to_string(c.expansion_rule) : std::string("auto")) + extra +
           "\n";
}

int cmd_racc(const Common& c, const std::vector<double>& radii)
{
    rsq::ReprConfig cfg;
    cfg.seed = c.seed;
    cfg.charges = c.charges;
    cfg.trials = c.trials;
    cfg.orders = to_expansion_orders(c.orders, c.interpretation);
    cfg.eval_rule_order = c.rule_order;
    cfg.expansion_rule_order = c.expansion_rule;
    cfg.radii = radii.empty() ? rsq::default_radii() : radii;
    rsq::lebedev_rule(cfg.eval_rule_order);
    check_rule_choice(cfg.orders, cfg.expansion_rule_order);
    for (double r : cfg.radii)
        if (!(r > 0.0))
            throw rsq::DomainError("radii must be positive");

    const auto rows = rsq::run_representation_accuracy(cfg);
    std::string out = config_line("racc", c, cfg.orders, " radii=" + join(cfg.radii));
    out += "kind,p,r,mean_error,scaled_prefactor,point_charge_error,series_pc_gap\n";
    for (const auto& r : rows)
        out += std::string(rsq::to_string(r.kind)) + "," + std::to_string(r.p) + "," + num(r.r) + "," +
               num(r.mean_error) + "," + num(r.scaled_prefactor) + "," + num(r.point_charge_error) + "," +
               num(r.series_pc_gap) + "\n";
    emit(c.out, out);
    return 0;
}

int cmd_tacc(const Common& c, const std::vector<double>& outer, const std::vector<double>& inner)
{
    rsq::ShiftConfig cfg;
    cfg.seed = c.seed;
    cfg.charges = c.charges;
    cfg.trials = c.trials;
    cfg.orders = to_expansion_orders(c.orders, c.interpretation);
    cfg.eval_rule_order = c.rule_order;
    cfg.expansion_rule_order = c.expansion_rule;
    cfg.outer_shifts = outer;
    cfg.inner_shifts = inner;
    rsq::lebedev_rule(cfg.eval_rule_order);
    check_rule_choice(cfg.orders, cfg.expansion_rule_order);

    const auto rows = rsq::run_translation_accuracy(cfg);
    std::string out = config_line("tacc", c, cfg.orders,
                                  " outer_shifts=" + join(outer) + " inner_shifts=" + join(inner));
    out += "kind,p,shift,cos_theta,abs_error,unshifted_error,refit_error,route_gap\n";
    for (const auto& r : rows)
        out += std::string(rsq::to_string(r.kind)) + "," + std::to_string(r.p) + "," + num(r.shift) + "," +
               num(r.cos_theta) + "," + num(r.abs_error) + "," + num(r.unshifted_error) + "," +
               num(r.refit_error) + "," + num(r.route_gap) + "\n";
    emit(c.out, out);
    return 0;
}

int cmd_flow(const std::string& scene_path, const std::vector<int>& orders, int expansion_rule, int reference,
             const std::string& dump_dir, const std::string& out_path)
{
    std::istringstream scene_text(rsq::read_file(scene_path));
    const auto scene = rsq::read_scene(scene_text);
    rsq::FlowConfig cfg;
    cfg.orders = orders;
    cfg.expansion_rule_order = expansion_rule;
    cfg.reference_rule_order = reference;
    for (int p : orders)
        if (p < 1)
            throw rsq::DomainError("flow orders must be positive");
    check_rule_choice(orders, expansion_rule);
    rsq::lebedev_rule(reference);

    const auto run = rsq::run_flow(scene, cfg);
    std::string out = "# rsq " + std::string(rsq::kVersion) + " flow scene=" +
                      std::filesystem::path(scene_path).filename().string() + " spheres=" +
                      std::to_string(scene.size()) + " p=" + join(orders) + " expansion_rule=" +
                      (expansion_rule ? std::to_string(expansion_rule) : std::string("auto")) +
                      " reference_rule=" + std::to_string(reference) + "\n";
    out += "p,sphere,radius,boundary_error,collocation_residual,rcond\n";
    for (const auto& r : run.rows)
        out += std::to_string(r.p) + "," + std::to_string(r.sphere) + "," + num(r.radius) + "," +
               num(r.boundary_error) + "," + num(r.collocation_residual) + "," + num(r.rcond) + "\n";
    emit(out_path, out);

    if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        for (std::size_t k = 0; k < run.solutions.size(); ++k)
            for (std::size_t s = 0; s < run.solutions[k].expansions.size(); ++s) {
                std::ostringstream text;
                rsq::write_expansion(text, run.solutions[k].expansions[s]);
                const auto name = "p" + std::to_string(orders[k]) + "_sphere" + std::to_string(s) + ".txt";
                rsq::write_file(std::filesystem::path(dump_dir) / name, text.str());
            }
    }
    return 0;
}

int cmd_exactness(const std::vector<int>& rule_orders, const std::vector<int>& degrees, const std::string& out_path)
{
    const auto span = rsq::lebedev_orders();
    const std::vector<int> orders = rule_orders.empty() ? std::vector<int>(span.begin(), span.end()) : rule_orders;
    std::string out = "# rsq " + std::string(rsq::kVersion) + " exactness\n";
    out += "rule_order,points,degree,max_abs_error,monomial_error,worst_monomial,zonal_error,worst_zonal_degree\n";
    for (int order : orders) {
        const auto rule = rsq::lebedev_rule(order);
        std::vector<int> ds = degrees;
        if (ds.empty())
            ds = {order, order + 2};
        for (int d : ds) {
            if (d < 0)
                throw rsq::DomainError("degree must be non-negative");
            const auto rep = rsq::verify_exactness(*rule, d);
            out += std::to_string(order) + "," + std::to_string(rule->size()) + "," + std::to_string(d) + "," +
                   num(rep.max_abs_error) + "," + num(rep.monomial_error) + "," + std::to_string(rep.worst_monomial[0]) +
                   ":" + std::to_string(rep.worst_monomial[1]) + ":" + std::to_string(rep.worst_monomial[2]) + "," +
                   num(rep.zonal_error) + "," + std::to_string(rep.worst_zonal_degree) + "\n";
        }
    }
    emit(out_path, out);
    return 0;
}

int cmd_convert(const std::string& in_path, const std::string& direction, int order, double radius, int rule_order,
                const std::string& out_path)
{
    std::istringstream in(rsq::read_file(in_path));
    std::ostringstream out;
    auto rule_for = [&](int p) { return rsq::expansion_rule(p, rule_order); };
    if (direction == "charges-to-polytensor") {
        rsq::write_polytensor(out, rsq::moments_from_charges(rsq::read_charges(in), order));
    } else if (direction == "charges-to-expansion") {
        rsq::write_expansion(out, rsq::fit_outer(rsq::read_charges(in), {}, radius, order, rule_for(order)));
    } else if (direction == "polytensor-to-expansion") {
        const auto pt = rsq::read_polytensor(in);
        rsq::write_expansion(out, rsq::expansion_from_polytensor(pt, radius, rule_for(pt.order())));
    } else if (direction == "expansion-to-polytensor") {
        rsq::write_polytensor(out, rsq::polytensor_from_expansion(rsq::read_expansion(in)));
    } else {
        rsq::write_charges(out, rsq::as_point_charges(rsq::read_expansion(in)));
    }
    emit(out_path, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multipole expansions in quadrature form: accuracy studies, flow solver, conversions"};
    app.set_version_flag("--version", std::string("rsq ") + rsq::kVersion);
    app.require_subcommand(1);

    Common racc_opts;
    std::vector<double> radii;
    auto* racc = app.add_subcommand("racc", "accuracy of fitted expansions versus evaluation radius");
    add_common(racc, racc_opts);
    racc->add_option("--radii", radii, "outer evaluation radii (inner uses 1/r)")->delimiter(',');

    Common tacc_opts;
    std::vector<double> outer_shifts{0.2, 0.6, 0.8}, inner_shifts{0.1, 0.2, 0.3, 0.4};
    auto* tacc = app.add_subcommand("tacc", "accuracy after shifting expansions");
    add_common(tacc, tacc_opts);
    tacc->add_option("--outer-shifts", outer_shifts, "source-sphere offsets")->delimiter(',')->capture_default_str();
    tacc->add_option("--inner-shifts", inner_shifts, "evaluation-sphere offsets")->delimiter(',')->capture_default_str();

    std::string scene, flow_out, dump_dir;
    std::vector<int> flow_orders{2, 3, 4, 5, 6, 7, 8};
    int flow_rule = 0, reference = 59;
    auto* flow = app.add_subcommand("flow", "potential flow around translating spheres");
    flow->add_option("--scene", scene, "scene file: cx cy cz R vx vy vz per line")->required();
    flow->add_option("--orders", flow_orders, "expansion orders p")->delimiter(',')->capture_default_str();
    flow->add_option("--expansion-rule", flow_rule, "Lebedev order on each sphere (0: smallest adequate)")
        ->capture_default_str();
    flow->add_option("--reference-order", reference, "Lebedev order for the boundary error")->capture_default_str();
    flow->add_option("--dump-dir", dump_dir, "write each solved expansion here");
    flow->add_option("--out", flow_out, "output CSV (default stdout)");

    std::vector<int> ex_orders, degrees;
    std::string ex_out;
    auto* exact = app.add_subcommand("exactness", "check polynomial exactness of the embedded rules");
    exact->add_option("--rule-order", ex_orders, "rules to check (default: all)")->delimiter(',');
    exact->add_option("--degree", degrees, "degrees to check (default: design degree and two beyond)")
        ->delimiter(',');
    exact->add_option("--out", ex_out, "output CSV (default stdout)");

    std::string conv_in, conv_out, direction;
    int conv_order = 4, conv_rule = 0;
    double conv_radius = 1.0;
    auto* convert = app.add_subcommand("convert", "convert between charges, polytensors and expansions");
    convert->add_option("--in", conv_in, "input file")->required()->check(CLI::ExistingFile);
    convert->add_option("--direction", direction, "conversion")
        ->required()
        ->check(CLI::IsMember({"charges-to-polytensor", "charges-to-expansion", "polytensor-to-expansion",
                               "expansion-to-polytensor", "expansion-to-charges"}));
    convert->add_option("--order", conv_order, "expansion / polytensor order p")->capture_default_str();
    convert->add_option("--radius", conv_radius, "expansion radius")->capture_default_str();
    convert->add_option("--rule-order", conv_rule, "Lebedev order (0: smallest adequate)")->capture_default_str();
    convert->add_option("--out", conv_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    try {
        if (*racc)
            return cmd_racc(racc_opts, radii);
        if (*tacc)
            return cmd_tacc(tacc_opts, outer_shifts, inner_shifts);
        if (*flow)
            return cmd_flow(scene, flow_orders, flow_rule, reference, dump_dir, flow_out);
        if (*exact)
            return cmd_exactness(ex_orders, degrees, ex_out);
        if (*convert)
            return cmd_convert(conv_in, direction, conv_order, conv_radius, conv_rule, conv_out);
    } catch (const rsq::Error& e) {
        std::cerr << "rsq: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "rsq: " << e.what() << '\n';
        return kConfigError;
    }
    return 0;
}
