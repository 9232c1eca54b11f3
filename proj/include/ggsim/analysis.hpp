#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ggsim/grid.hpp"
#include "ggsim/state.hpp"
#include "ggsim/steppers.hpp"

namespace ggsim {

/// Per-step space-averaged speed estimates together with the state jump
/// [phi] = phi(+inf) - phi(-inf) they were normalized by.
struct SpeedSeries {
    double phi_jump = 0.0;
    std::vector<std::pair<double, double>> values; ///< (t^n, s^n), ordered in t
};

/// Space-averaged speed of one step,
///   s^n = dx / ([phi] dt) * sum_i (v_i^n - v_i^{n+1}).
/// Positive for a rightward tumour front (v = 1 left, 0 right, [phi] = -1).
double speed_estimate_step(const std::vector<double>& v_n, const std::vector<double>& v_np1,
                           double dx, double dt, double phi_jump);

/// Arithmetic mean of s^n over the trailing tail_fraction of the series.
double asymptotic_speed(const SpeedSeries& series, double tail_fraction = 0.25);

/// Peak-to-peak spread of s^n over the same tail, reported as an uncertainty
/// alongside the tail mean.
double speed_tail_spread(const SpeedSeries& series, double tail_fraction = 0.25);

/// Observer that accumulates one speed estimate per step from the v field.
class SpeedObserver {
public:
    SpeedObserver(double dx, double dt, double phi_jump);
    void operator()(const FieldState& prev, const FieldState& next, const StepReport& report);
    const SpeedSeries& series() const { return series_; }

private:
    double dx_;
    double dt_;
    SpeedSeries series_;
};

/// Closed-form heterogeneous tumour front (d < 1 regime):
///   v(x,t) = 1 - exp((x - s t)/sqrt(2 d)) for x <= s t, 0 otherwise,
/// traveling at s = sqrt(d/2). Accepted for any d > 0; outside d < 1 the
/// formula no longer solves the model and is only a reference profile.
double exact_front(double x, double t, double d);
double exact_front_speed(double d);

enum class FrontLabel { sharp, smooth, indeterminate };
const char* front_label_name(FrontLabel l);

/// Thresholds for the sharp/smooth decision. tail_length compares the
/// distance between the eps_high and eps_low level crossings against
/// k_sharp * dx (sharp) and 4 k_sharp * dx (smooth).
struct ShapeKnobs {
    double eps_high = 0.1;
    double eps_low = 1e-4;
    double k_sharp = 10.0;
};

struct FrontShapeReport {
    FrontLabel label = FrontLabel::indeterminate;
    double edge_position = 0.0; ///< leading point where v falls below eps_low (final snapshot)
    double tail_length = 0.0;   ///< median crossing distance over the snapshots used
    double edge_slope = 0.0;    ///< one-sided slope just behind the edge (final snapshot)
};

/// Classifies the shape of a rightward-moving decreasing front from a series
/// of v snapshots. Profiles are median-smoothed over 3 cells, level crossings
/// located by linear interpolation, and the label decided on the median tail
/// length of the most recent half of the snapshots.
FrontShapeReport classify_front(const std::vector<std::pair<double, std::vector<double>>>& snapshots,
                                const Grid1D& grid, const ShapeKnobs& knobs = {});

struct ErrorNorms {
    double l_inf = 0.0;
    double l2 = 0.0; ///< sqrt(sum diff^2 dx)
};

ErrorNorms error_norms(const std::vector<double>& numeric, const std::vector<double>& reference,
                       double dx);

} // namespace ggsim
