#pragma once

#include <cstddef>
#include <vector>

namespace ggsim {

/// Uniform cell-centered 1D mesh. dx is always derived from the domain and
/// the cell count; the center of cell i (0-based) is x_left + (i + 1/2) dx.
struct Grid1D {
    double x_left = 0.0;
    double x_right = 0.0;
    std::size_t n_cells = 0;
    double dx = 0.0;

    double cell_center(std::size_t i) const {
        return x_left + (static_cast<double>(i) + 0.5) * dx;
    }
    std::vector<double> cell_centers() const;
};

/// Builds a uniform grid. The span (x_right - x_left) must be an integer
/// multiple of dx to within 1e-9, otherwise NonIntegerCellCount is raised.
Grid1D make_grid(double x_left, double x_right, double dx);

/// Fixed-step time horizon plus the instants at which snapshots are taken.
/// Every snapshot time (and t_final itself) must be an integer multiple of
/// dt to within 1e-12 relative tolerance.
struct TimeControl {
    double dt = 0.0;
    double t_final = 0.0;
    std::vector<double> snapshot_times;

    long long n_steps() const;
    long long step_index_of(double t) const;
    void validate() const;
};

/// Convenience builder: n_snapshots instants spread evenly over [0, t_final],
/// each snapped to the nearest step so the multiple-of-dt invariant holds.
TimeControl make_time_control(double dt, double t_final, std::size_t n_snapshots);

} // namespace ggsim
