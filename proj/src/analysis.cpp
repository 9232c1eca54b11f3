#include "ggsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ggsim/errors.hpp"

namespace ggsim {

double speed_estimate_step(const std::vector<double>& v_n, const std::vector<double>& v_np1,
                           double dx, double dt, double phi_jump) {
    if (v_n.size() != v_np1.size())
        fail(Errc::length_mismatch, "speed estimate needs equal-length states");
    if (phi_jump == 0.0) fail(Errc::zero_jump, "[phi] must be nonzero");
    double sum = 0.0;
    for (std::size_t i = 0; i < v_n.size(); ++i) sum += v_n[i] - v_np1[i];
    return dx / (phi_jump * dt) * sum;
}

namespace {

std::size_t tail_begin(const SpeedSeries& series, double tail_fraction) {
    if (series.values.empty()) fail(Errc::empty_series, "speed series is empty");
    if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
        fail(Errc::invalid_spec, "tail_fraction must lie in (0, 1]");
    const std::size_t m = series.values.size();
    std::size_t k = static_cast<std::size_t>(std::floor(static_cast<double>(m) * tail_fraction));
    k = std::clamp<std::size_t>(k, 1, m);
    return m - k;
}

} // namespace

double asymptotic_speed(const SpeedSeries& series, double tail_fraction) {
    const std::size_t begin = tail_begin(series, tail_fraction);
    double sum = 0.0;
    for (std::size_t i = begin; i < series.values.size(); ++i) sum += series.values[i].second;
    return sum / static_cast<double>(series.values.size() - begin);
}

double speed_tail_spread(const SpeedSeries& series, double tail_fraction) {
    const std::size_t begin = tail_begin(series, tail_fraction);
    double lo = series.values[begin].second;
    double hi = lo;
    for (std::size_t i = begin; i < series.values.size(); ++i) {
        lo = std::min(lo, series.values[i].second);
        hi = std::max(hi, series.values[i].second);
    }
    return hi - lo;
}

SpeedObserver::SpeedObserver(double dx, double dt, double phi_jump) : dx_(dx), dt_(dt) {
    if (phi_jump == 0.0) fail(Errc::zero_jump, "[phi] must be nonzero");
    series_.phi_jump = phi_jump;
}

void SpeedObserver::operator()(const FieldState& prev, const FieldState& next,
                               const StepReport&) {
    series_.values.emplace_back(
        prev.t, speed_estimate_step(prev.v, next.v, dx_, dt_, series_.phi_jump));
}

double exact_front_speed(double d) {
    if (!(d > 0.0)) fail(Errc::non_positive_d, "exact front requires d > 0");
    return std::sqrt(d / 2.0);
}

double exact_front(double x, double t, double d) {
    const double s = exact_front_speed(d);
    const double xi = x - s * t;
    if (xi > 0.0) return 0.0;
    return 1.0 - std::exp(xi / std::sqrt(2.0 * d));
}

const char* front_label_name(FrontLabel l) {
    switch (l) {
    case FrontLabel::sharp: return "Sharp";
    case FrontLabel::smooth: return "Smooth";
    case FrontLabel::indeterminate: return "Indeterminate";
    }
    return "?";
}

namespace {

std::vector<double> median3(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<double> out(v);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double a = v[i - 1], b = v[i], c = v[i + 1];
        // median of three
        out[i] = std::max(std::min(a, b), std::min(std::max(a, b), c));
    }
    return out;
}

struct Crossing {
    std::size_t cell; ///< last cell with value >= level
    double x;         ///< interpolated crossing position
};

// Rightmost downward crossing of `level`: the largest i with v[i] >= level
// and v[i+1] < level, position interpolated between the two cell centers.
Crossing find_crossing(const std::vector<double>& v, const Grid1D& grid, double level) {
    for (std::size_t i = v.size() - 1; i-- > 0;) {
        if (v[i] >= level && v[i + 1] < level) {
            const double x0 = grid.cell_center(i);
            const double frac = (v[i] - level) / (v[i] - v[i + 1]);
            return {i, x0 + frac * grid.dx};
        }
    }
    fail(Errc::front_not_found, "no downward crossing of level " + std::to_string(level));
}

double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t m = xs.size();
    return (m % 2 == 1) ? xs[m / 2] : 0.5 * (xs[m / 2 - 1] + xs[m / 2]);
}

} // namespace

FrontShapeReport classify_front(
    const std::vector<std::pair<double, std::vector<double>>>& snapshots, const Grid1D& grid,
    const ShapeKnobs& knobs) {
    if (snapshots.empty()) fail(Errc::empty_series, "no snapshots to classify");
    if (!(knobs.eps_low < knobs.eps_high))
        fail(Errc::invalid_spec, "eps_low must be smaller than eps_high");

    // Decide on the most recent half of the snapshots; earlier ones are still
    // shaped by the initial data.
    const std::size_t first = snapshots.size() / 2;
    std::vector<double> tails;
    FrontShapeReport report;

    for (std::size_t k = first; k < snapshots.size(); ++k) {
        const std::vector<double> smooth = median3(snapshots[k].second);
        const Crossing high = find_crossing(smooth, grid, knobs.eps_high);
        const Crossing low = find_crossing(smooth, grid, knobs.eps_low);
        if (low.x < high.x)
            fail(Errc::front_not_found, "level crossings are out of order (non-monotone front)");
        for (std::size_t i = high.cell; i < low.cell; ++i) {
            if (smooth[i + 1] > smooth[i] + 1e-12)
                fail(Errc::front_not_found, "front region is not monotone decreasing");
        }
        const double buffer = 5.0 * grid.dx;
        if (low.x > grid.x_right - buffer || low.x < grid.x_left + buffer)
            fail(Errc::boundary_contamination,
                 "front edge at x = " + std::to_string(low.x) + " is within 5 cells of the boundary");
        tails.push_back(low.x - high.x);

        if (k + 1 == snapshots.size()) {
            report.edge_position = low.x;
            const std::size_t j = low.cell;
            report.edge_slope =
                (j > 0) ? (smooth[j] - smooth[j - 1]) / grid.dx : 0.0;
        }
    }

    report.tail_length = median_of(tails);
    if (report.tail_length <= knobs.k_sharp * grid.dx)
        report.label = FrontLabel::sharp;
    else if (report.tail_length >= 4.0 * knobs.k_sharp * grid.dx)
        report.label = FrontLabel::smooth;
    else
        report.label = FrontLabel::indeterminate;
    return report;
}

ErrorNorms error_norms(const std::vector<double>& numeric, const std::vector<double>& reference,
                       double dx) {
    if (numeric.size() != reference.size())
        fail(Errc::length_mismatch, "error norms need equal-length vectors");
    ErrorNorms norms;
    double sq = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double diff = numeric[i] - reference[i];
        norms.l_inf = std::max(norms.l_inf, std::abs(diff));
        sq += diff * diff;
    }
    norms.l2 = std::sqrt(sq * dx);
    return norms;
}

} // namespace ggsim
