#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ggsim/analysis.hpp"
#include "ggsim/grid.hpp"
#include "ggsim/model.hpp"
#include "ggsim/state.hpp"
#include "ggsim/steppers.hpp"

namespace ggsim {

enum class Analysis { speed, shape, exact_compare };

struct RiemannIC {
    std::vector<double> left;
    std::vector<double> right;
    double x_jump = 0.0;
};

/// A named, fully resolved run recipe. Deterministic: identical specs yield
/// bit-identical results.
struct ExperimentSpec {
    std::string name;
    ModelParams params;
    Grid1D grid;
    TimeControl time;
    RiemannIC initial;
    std::set<Analysis> analyses;
    ShapeKnobs shape_knobs;
    double tail_fraction = 0.25;
    StepOptions step_options;

    void validate() const;
};

struct ExactComparison {
    double l_inf = 0.0;
    double l2 = 0.0;
    std::vector<double> exact; ///< exact front sampled at the final snapshot
};

struct ExperimentResult {
    ExperimentSpec spec;
    std::vector<FieldState> snapshots;
    std::optional<SpeedSeries> speed_series;
    std::optional<double> asymptotic_speed;
    std::optional<double> speed_tail_spread;
    std::optional<FrontShapeReport> shape;
    std::optional<ExactComparison> exact_compare;
    std::vector<std::string> warnings;
};

/// Builds the Riemann data, evolves, and attaches the requested analyses.
ExperimentResult run(const ExperimentSpec& spec);

/// Tumour-front jump [phi] = v(right state) - v(left state) of a spec.
double tumour_phi_jump(const ExperimentSpec& spec);

/// Exact front shifted so its edge starts at the spec's Riemann jump,
/// sampled on the spec's grid at time t.
std::vector<double> exact_front_on_grid(const ExperimentSpec& spec, double t);

enum class SweepParameter { r, d, epsilon };
const char* sweep_parameter_name(SweepParameter p);
std::optional<SweepParameter> sweep_parameter_from_name(const std::string& name);

struct SweepSpec {
    ExperimentSpec base;
    SweepParameter parameter = SweepParameter::r;
    std::vector<double> values; ///< strictly monotone
};

struct SweepPoint {
    double value = 0.0;
    double speed = 0.0;
    double tail_spread = 0.0;
    std::string error; ///< non-empty when this value failed
};

/// One run per value (the Riemann state is rebuilt when d changes); results
/// ordered by value. Individual failures are recorded per point and only
/// fatal when every value fails. Runs fan out to a worker pool; the output
/// order never depends on completion order.
std::vector<SweepPoint> sweep(const SweepSpec& spec);

struct EpsilonPoint {
    double epsilon = 0.0;
    double speed = 0.0;
    double l_inf_vs_exact = 0.0;
};

/// Asymptotic tumour-front speed and final-time L-inf distance to the exact
/// heterogeneous front for each relaxation value. The base must be an
/// epsilon-system spec with d < 1.
std::vector<EpsilonPoint> epsilon_transition(const std::vector<double>& values,
                                             const ExperimentSpec& base);

struct RefinementPoint {
    double dx = 0.0;
    double dt = 0.0;
    double speed = 0.0;
    double l_inf_vs_exact = 0.0;
};

/// Runs the one-equation model on each (dx, dt) mesh and compares the final
/// profile to the exact front. Requires d < 1.
std::vector<RefinementPoint> refinement_study(double d,
                                              const std::vector<std::pair<double, double>>& meshes);

/// Registry of builtin experiments (reference parameter sets).
const std::map<std::string, ExperimentSpec>& builtin_experiments();
std::vector<std::string> builtin_experiment_names();
const ExperimentSpec& builtin_experiment(const std::string& name);
std::string builtin_experiment_summary(const std::string& name);

/// Default sweep values for a parameter (desk-scale subsamples of the full
/// ranges, which remain reachable through explicit value lists).
std::vector<double> default_sweep_values(SweepParameter p);
std::vector<double> default_epsilon_values();
std::vector<std::pair<double, double>> default_refinement_meshes();

} // namespace ggsim
