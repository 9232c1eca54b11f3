#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggsim/experiments.hpp"
#include "ggsim/steppers.hpp"

namespace ggsim {

/// Parsed `key = value` run configuration. Unset fields fall back to the
/// named experiment's defaults when the config is resolved.
struct RunConfig {
    std::optional<std::string> experiment;
    std::optional<std::string> variant;
    std::optional<double> d;
    std::optional<double> r;
    std::optional<double> D;
    std::optional<double> c;
    std::optional<double> epsilon;
    std::optional<double> x_left;
    std::optional<double> x_right;
    std::optional<double> dx;
    std::optional<double> dt;
    std::optional<double> t_final;
    std::optional<double> x_jump;
    std::optional<long long> snapshots;
    std::optional<bool> analysis_speed;
    std::optional<bool> analysis_shape;
    std::optional<bool> analysis_exact;
    std::optional<double> eps_high;
    std::optional<double> eps_low;
    std::optional<double> k_sharp;
    std::optional<double> tail_fraction;
    std::optional<std::string> cfl_policy; ///< "warn" | "fail"
    std::optional<std::string> output_dir;

    // Subcommand-specific keys (sweep / epsilon / refine).
    std::optional<std::string> parameter;
    std::optional<std::vector<double>> values;
    std::optional<std::string> meshes; ///< "dx:dt,dx:dt,..."

    bool operator==(const RunConfig&) const = default;
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys and
/// malformed values are reported with their line number.
RunConfig parse_config(const std::string& text);

/// Applies `key=value` override strings on top of an existing config.
void apply_overrides(RunConfig& config, const std::vector<std::string>& overrides);

/// Canonical text form; parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& config);

/// Resolves a config into a runnable spec: named-experiment defaults first,
/// then field overrides. A config without an experiment key needs at least a
/// variant to build an inline spec; an empty config is an error.
ExperimentSpec resolve_config(const RunConfig& config);

/// Default values/meshes for the sweep, epsilon and refine subcommands when
/// the config leaves them unset.
std::vector<std::pair<double, double>> parse_meshes(const std::string& text);

} // namespace ggsim
