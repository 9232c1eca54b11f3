#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggsim/grid.hpp"
#include "ggsim/model.hpp"
#include "ggsim/state.hpp"

namespace ggsim {

enum class CflPolicy { warn, fail };

struct StepOptions {
    CflPolicy cfl_policy = CflPolicy::warn;
    /// Test hook: zeroes every reaction term so that only the (conservative)
    /// diffusion acts.
    bool disable_reaction = false;
};

struct StepReport {
    double t_new = 0.0;
    double max_update = 0.0; ///< L-inf change over the step, all fields
    std::optional<double> cfl_number; ///< explicit schemes only
    std::vector<std::string> warnings;
};

/// Semi-discrete degenerate flux divergence
///   (1/dx^2) [ (1-u_i)(v_{i+1} - 2 v_i + v_{i-1})
///              - (v_{i+1} - v_i)(u_{i+1} - u_i)/2
///              - (v_i - v_{i-1})(u_i - u_{i-1})/2 ]
/// evaluated at every cell with zero-flux mirror ghosts at both ends.
std::vector<double> degenerate_flux_divergence(const std::vector<double>& u,
                                               const std::vector<double>& v, double dx);

/// One semi-implicit step of the rescaled two-equation system: explicit
/// logistic/death reactions, implicit degenerate diffusion with coefficients
/// taken at the fresh u.
std::pair<FieldState, StepReport> step_two_eq(const FieldState& state, const ModelParams& params,
                                              const Grid1D& grid, double dt,
                                              const StepOptions& opts = {});

/// One step of the full three-field model: u explicit with the acid-driven
/// death term, v as in step_two_eq scaled by D, w with explicit reaction
/// c (v - w) and implicit Laplacian.
std::pair<FieldState, StepReport> step_full(const FieldState& state, const ModelParams& params,
                                            const Grid1D& grid, double dt,
                                            const StepOptions& opts = {});

/// One explicit step of the one-equation reduction. The diffusion increment
/// switches per cell between the porous-medium form (v_i < 1/d) and the plain
/// Laplacian (v_i >= 1/d). Guards the effective diffusion CFL number.
std::pair<FieldState, StepReport> step_one_eq(const FieldState& state, const ModelParams& params,
                                              const Grid1D& grid, double dt,
                                              const StepOptions& opts = {});

/// One step of the epsilon-relaxed system: identical to step_two_eq with
/// r = 1 except the explicit u reaction is scaled by 1/epsilon.
std::pair<FieldState, StepReport> step_epsilon(const FieldState& state, const ModelParams& params,
                                               const Grid1D& grid, double dt,
                                               const StepOptions& opts = {});

/// Dispatch on params.variant.
std::pair<FieldState, StepReport> step(const FieldState& state, const ModelParams& params,
                                       const Grid1D& grid, double dt,
                                       const StepOptions& opts = {});

/// Called after every step with the previous state, the new state and the
/// step report.
using StepObserver =
    std::function<void(const FieldState&, const FieldState&, const StepReport&)>;

struct EvolveResult {
    std::vector<FieldState> snapshots;
    std::vector<std::string> warnings; ///< deduplicated, with occurrence counts
    long long steps_taken = 0;
};

/// Advances the state from t = 0 to t_final with the variant's stepper,
/// recording snapshots at the requested instants and feeding every
/// consecutive state pair to the observers. Fully deterministic.
EvolveResult evolve(const FieldState& initial, const ModelParams& params, const Grid1D& grid,
                    const TimeControl& time, const StepOptions& opts = {},
                    const std::vector<StepObserver>& observers = {});

} // namespace ggsim
