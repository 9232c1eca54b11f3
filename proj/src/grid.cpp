#include "ggsim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ggsim/errors.hpp"

namespace ggsim {

std::vector<double> Grid1D::cell_centers() const {
    std::vector<double> xs(n_cells);
    for (std::size_t i = 0; i < n_cells; ++i) xs[i] = cell_center(i);
    return xs;
}

Grid1D make_grid(double x_left, double x_right, double dx) {
    if (!(x_left < x_right))
        fail(Errc::invalid_domain, "x_left must be strictly smaller than x_right");
    if (!(dx > 0.0) || !std::isfinite(dx))
        fail(Errc::invalid_domain, "dx must be positive and finite");

    const double ratio = (x_right - x_left) / dx;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9)
        fail(Errc::non_integer_cell_count,
             "(x_right - x_left)/dx = " + std::to_string(ratio) + " is not an integer");

    Grid1D g;
    g.x_left = x_left;
    g.x_right = x_right;
    g.n_cells = static_cast<std::size_t>(rounded);
    g.dx = (x_right - x_left) / rounded;
    return g;
}

namespace {

long long multiple_of_dt(double t, double dt, const char* what) {
    const long long k = std::llround(t / dt);
    if (k < 0 || std::abs(static_cast<double>(k) * dt - t) > 1e-12 * std::max(1.0, std::abs(t)))
        fail(Errc::invalid_time_control,
             std::string(what) + " " + std::to_string(t) + " is not an integer multiple of dt");
    return k;
}

} // namespace

long long TimeControl::n_steps() const { return multiple_of_dt(t_final, dt, "t_final"); }

long long TimeControl::step_index_of(double t) const {
    return multiple_of_dt(t, dt, "snapshot time");
}

void TimeControl::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt))
        fail(Errc::invalid_time_control, "dt must be positive and finite");
    if (t_final < 0.0 || !std::isfinite(t_final))
        fail(Errc::invalid_time_control, "t_final must be non-negative and finite");
    const long long total = n_steps();
    double prev = -1.0;
    for (double s : snapshot_times) {
        if (s <= prev)
            fail(Errc::invalid_time_control, "snapshot times must be strictly increasing");
        prev = s;
        const long long k = step_index_of(s);
        if (k > total)
            fail(Errc::invalid_time_control,
                 "snapshot time " + std::to_string(s) + " lies beyond t_final");
    }
}

TimeControl make_time_control(double dt, double t_final, std::size_t n_snapshots) {
    TimeControl tc;
    tc.dt = dt;
    tc.t_final = t_final;
    if (!(dt > 0.0)) fail(Errc::invalid_time_control, "dt must be positive");
    const long long total = std::llround(t_final / dt);
    if (n_snapshots == 0 || total == 0) {
        tc.snapshot_times = {0.0};
        tc.validate();
        return tc;
    }
    long long prev_step = -1;
    for (std::size_t j = 0; j < n_snapshots; ++j) {
        const double frac =
            (n_snapshots == 1) ? 1.0
                               : static_cast<double>(j) / static_cast<double>(n_snapshots - 1);
        long long k = std::llround(frac * static_cast<double>(total));
        k = std::clamp(k, prev_step + 1, total);
        if (k > total) break;
        tc.snapshot_times.push_back(static_cast<double>(k) * dt);
        prev_step = k;
    }
    tc.validate();
    return tc;
}

} // namespace ggsim
