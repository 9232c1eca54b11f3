#pragma once

#include <optional>
#include <vector>

#include "ggsim/grid.hpp"
#include "ggsim/model.hpp"

namespace ggsim {

/// Per-cell field values at one time level. The one-equation reduction keeps
/// only v (u stays empty and is recovered on demand via recover_healthy); w
/// is present exactly for the full model.
struct FieldState {
    double t = 0.0;
    std::vector<double> u;
    std::vector<double> v;
    std::optional<std::vector<double>> w;
};

/// Piecewise-constant Riemann data: cells with center < x_jump carry
/// left_state, the rest carry right_state. State tuples are ordered (u, v, w)
/// truncated to the variant's field count ((v) for one_eq).
FieldState riemann_initial(const Grid1D& grid, Variant variant,
                           const std::vector<double>& left_state,
                           const std::vector<double>& right_state, double x_jump);

/// Healthy-tissue density induced by the stationarity assumption of the
/// one-equation reduction: u_i = max(1 - d v_i, 0).
std::vector<double> recover_healthy(const std::vector<double>& v, double d);

/// Equilibrium endpoint states used for the canonical invasion setup: the
/// stable invaded state ((1-d)^+, 1[, 1]) on the left against the healthy
/// state (1, 0[, 0]) on the right; the one-equation version is 1 against 0.
struct RiemannStates {
    std::vector<double> left;
    std::vector<double> right;
};
RiemannStates canonical_invasion_states(Variant variant, double d);

} // namespace ggsim
