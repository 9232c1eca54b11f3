#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ggsim/config.hpp"
#include "ggsim/csv_io.hpp"
#include "ggsim/errors.hpp"
#include "ggsim/experiments.hpp"

namespace {

using namespace ggsim;
namespace fs = std::filesystem;

struct CommonArgs {
    std::string config_file;
    std::vector<std::string> sets;
    bool gnuplot = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_file, "plain key = value configuration file");
    cmd->add_option("--set", args.sets, "override a config key, e.g. --set d=0.5")
        ->take_all();
}

RunConfig load_config(const CommonArgs& args) {
    RunConfig cfg;
    if (!args.config_file.empty()) {
        std::ifstream in(args.config_file);
        if (!in) fail(Errc::io_error, "cannot read config file " + args.config_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        cfg = parse_config(buf.str());
    }
    apply_overrides(cfg, args.sets);
    return cfg;
}

fs::path output_dir(const RunConfig& cfg, const std::string& fallback_name) {
    if (cfg.output_dir) return fs::path(*cfg.output_dir);
    return fs::path("out") / fallback_name;
}

void print_warnings(const ExperimentResult& result) {
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_run(const CommonArgs& args) {
    RunConfig cfg = load_config(args);
    const ExperimentSpec spec = resolve_config(cfg);
    const ExperimentResult result = run(spec);
    print_warnings(result);

    const fs::path dir = output_dir(cfg, spec.name);
    const auto files = write_snapshots(result, dir);
    if (args.gnuplot) write_gnuplot_script(result, files, dir);

    std::cout << "experiment " << spec.name << ": " << result.snapshots.size()
              << " snapshots -> " << dir.string() << "\n";
    if (result.asymptotic_speed)
        std::cout << "asymptotic speed = " << format_full(*result.asymptotic_speed)
                  << " (tail spread " << format_full(*result.speed_tail_spread) << ")\n";
    if (result.shape)
        std::cout << "front label = " << front_label_name(result.shape->label)
                  << " (edge at x = " << format_full(result.shape->edge_position) << ")\n";
    if (result.exact_compare)
        std::cout << "L_inf vs exact front = " << format_full(result.exact_compare->l_inf)
                  << "\n";
    return 0;
}

int cmd_sweep(const CommonArgs& args) {
    RunConfig cfg = load_config(args);
    if (!cfg.experiment) cfg.experiment = "twoeq_homogeneous";
    // Sweep fronts outrun the single-run window; widen unless overridden.
    if (!cfg.x_right) cfg.x_right = 80.0;

    SweepSpec spec;
    spec.parameter = sweep_parameter_from_name(cfg.parameter.value_or("r")).value();
    spec.values = cfg.values.value_or(default_sweep_values(spec.parameter));

    RunConfig base_cfg = cfg;
    base_cfg.parameter.reset();
    base_cfg.values.reset();
    spec.base = resolve_config(base_cfg);

    const auto points = sweep(spec);
    const fs::path dir = output_dir(cfg, spec.base.name + "_sweep");
    const fs::path csv = write_sweep_csv(points, sweep_parameter_name(spec.parameter), dir);

    std::cout << sweep_parameter_name(spec.parameter) << ",speed\n";
    for (const auto& p : points) {
        if (p.error.empty())
            std::cout << format_full(p.value) << "," << format_full(p.speed) << "\n";
        else
            std::cout << format_full(p.value) << ",failed: " << p.error << "\n";
    }
    std::cout << "wrote " << csv.string() << "\n";
    return 0;
}

int cmd_epsilon(const CommonArgs& args) {
    RunConfig cfg = load_config(args);
    if (!cfg.experiment) cfg.experiment = "epsilon_heterogeneous";
    const std::vector<double> values = cfg.values.value_or(default_epsilon_values());

    RunConfig base_cfg = cfg;
    base_cfg.values.reset();
    const ExperimentSpec base = resolve_config(base_cfg);

    const auto points = epsilon_transition(values, base);
    const fs::path dir = output_dir(cfg, base.name + "_transition");
    const fs::path csv = write_epsilon_csv(points, dir);

    std::cout << "epsilon,speed,l_inf\n";
    for (const auto& p : points)
        std::cout << format_full(p.epsilon) << "," << format_full(p.speed) << ","
                  << format_full(p.l_inf_vs_exact) << "\n";
    std::cout << "wrote " << csv.string() << "\n";
    return 0;
}

int cmd_refine(const CommonArgs& args) {
    RunConfig cfg = load_config(args);
    const double d = cfg.d.value_or(0.5);
    const auto meshes =
        cfg.meshes ? parse_meshes(*cfg.meshes) : default_refinement_meshes();

    const auto points = refinement_study(d, meshes);
    const fs::path dir = output_dir(cfg, "refinement");
    const fs::path csv = write_refinement_csv(points, dir);

    std::cout << "dx,dt,speed,l_inf\n";
    for (const auto& p : points)
        std::cout << format_full(p.dx) << "," << format_full(p.dt) << ","
                  << format_full(p.speed) << "," << format_full(p.l_inf_vs_exact) << "\n";
    std::cout << "wrote " << csv.string() << "\n";
    return 0;
}

int cmd_list() {
    for (const auto& name : builtin_experiment_names())
        std::cout << builtin_experiment_summary(name) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D finite-volume laboratory for the Gatenby-Gawlinski invasion model"};
    app.require_subcommand(1);

    CommonArgs run_args, sweep_args, eps_args, refine_args;

    CLI::App* run_cmd = app.add_subcommand("run", "run one experiment and write CSV output");
    add_common(run_cmd, run_args);
    run_cmd->add_flag("--gnuplot", run_args.gnuplot, "also emit a companion plot.gp script");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "asymptotic speed as a function of r, d or epsilon");
    add_common(sweep_cmd, sweep_args);

    CLI::App* eps_cmd = app.add_subcommand(
        "epsilon", "speed and exact-front distance across relaxation values");
    add_common(eps_cmd, eps_args);

    CLI::App* refine_cmd =
        app.add_subcommand("refine", "mesh refinement study against the exact front");
    add_common(refine_cmd, refine_args);

    CLI::App* list_cmd = app.add_subcommand("list", "list builtin experiments");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(run_args);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
        if (eps_cmd->parsed()) return cmd_epsilon(eps_args);
        if (refine_cmd->parsed()) return cmd_refine(refine_args);
        if (list_cmd->parsed()) return cmd_list();
    } catch (const ggsim::SimError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ggsim::errc_is_numerical(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
