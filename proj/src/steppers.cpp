#include "ggsim/steppers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "ggsim/errors.hpp"
#include "ggsim/tridiagonal.hpp"

namespace ggsim {

namespace {

void require_variant(const ModelParams& p, Variant v) {
    if (p.variant != v)
        fail(Errc::invalid_params, std::string("stepper expects variant ") + variant_name(v) +
                                       ", got " + variant_name(p.variant));
}

void require_fields(const FieldState& s, std::size_t n, std::size_t nf) {
    const bool ok = s.v.size() == n && (nf >= 2 ? s.u.size() == n : s.u.empty()) &&
                    (nf == 3 ? (s.w && s.w->size() == n) : !s.w);
    if (!ok) fail(Errc::length_mismatch, "field state does not match grid/variant");
}

bool all_finite(const std::vector<double>& xs) {
    return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

void check_finite(const FieldState& s) {
    if (!all_finite(s.u) || !all_finite(s.v) || (s.w && !all_finite(*s.w)))
        fail(Errc::non_finite_state, "state contains NaN/Inf after step");
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// The v update treats the bracketed diffusion terms implicitly. Grouping the
// new-time v factors of
//   (1-u_i)(v_{i+1} - 2 v_i + v_{i-1}) - (v_{i+1}-v_i)(u_{i+1}-u_i)/2
//                                      - (v_i-v_{i-1})(u_i-u_{i-1})/2
// gives the interface coefficients
//   gamma_i = 1 - (u_i + u_{i+1})/2     (right face)
//   beta_i  = 1 - (u_i + u_{i-1})/2     (left face),
// i.e. the bracket equals gamma_i (v_{i+1}-v_i) - beta_i (v_i-v_{i-1}), a flux
// form with face coefficients that average 1-u. With L = D dt/dx^2 the system
// for the new v is tridiagonal:
//   -L beta_i v_{i-1} + (1 + L (beta_i+gamma_i)) v_i - L gamma_i v_{i+1} = rhs_i.
// Zero-flux mirroring removes the beta term on the first row and the gamma
// term on the last row, so the row sums stay 1 and sum_i v_i is conserved
// whenever the reaction is off.
std::vector<double> implicit_degenerate_v_update(const std::vector<double>& u_new,
                                                 const std::vector<double>& v_old, double r_eff,
                                                 double diffusion, double dt, double dx) {
    const std::size_t n = v_old.size();
    const double lambda = diffusion * dt / (dx * dx);

    TridiagonalSystem sys;
    sys.sub.assign(n - 1, 0.0);
    sys.diag.assign(n, 0.0);
    sys.sup.assign(n - 1, 0.0);
    sys.rhs.assign(n, 0.0);

    for (std::size_t i = 0; i < n; ++i) {
        const double beta = (i == 0) ? 0.0 : 1.0 - 0.5 * (u_new[i] + u_new[i - 1]);
        const double gamma = (i + 1 == n) ? 0.0 : 1.0 - 0.5 * (u_new[i] + u_new[i + 1]);
        sys.diag[i] = 1.0 + lambda * (beta + gamma);
        if (i > 0) sys.sub[i - 1] = -lambda * beta;
        if (i + 1 < n) sys.sup[i] = -lambda * gamma;
        sys.rhs[i] = v_old[i] + r_eff * dt * v_old[i] * (1.0 - v_old[i]);
    }
    return solve_tridiagonal(sys);
}

// Plain implicit Laplacian step for the acid field.
std::vector<double> implicit_laplacian_update(const std::vector<double>& rhs, double dt,
                                              double dx) {
    const std::size_t n = rhs.size();
    const double lambda = dt / (dx * dx);

    TridiagonalSystem sys;
    sys.sub.assign(n - 1, -lambda);
    sys.diag.assign(n, 1.0 + 2.0 * lambda);
    sys.sup.assign(n - 1, -lambda);
    sys.rhs = rhs;
    if (n >= 1) {
        sys.diag[0] = 1.0 + lambda * (n > 1 ? 1.0 : 0.0);
        sys.diag[n - 1] = 1.0 + lambda * (n > 1 ? 1.0 : 0.0);
    }
    return solve_tridiagonal(sys);
}

} // namespace

std::vector<double> degenerate_flux_divergence(const std::vector<double>& u,
                                               const std::vector<double>& v, double dx) {
    const std::size_t n = v.size();
    if (u.size() != n) fail(Errc::length_mismatch, "u and v must have equal length");
    if (n < 3) fail(Errc::length_mismatch, "need at least 3 cells");

    std::vector<double> out(n);
    const double inv_dx2 = 1.0 / (dx * dx);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t im = (i == 0) ? 0 : i - 1;
        const std::size_t ip = (i + 1 == n) ? n - 1 : i + 1;
        out[i] = inv_dx2 * ((1.0 - u[i]) * (v[ip] - 2.0 * v[i] + v[im]) -
                            0.5 * (v[ip] - v[i]) * (u[ip] - u[i]) -
                            0.5 * (v[i] - v[im]) * (u[i] - u[im]));
    }
    return out;
}

std::pair<FieldState, StepReport> step_two_eq(const FieldState& state, const ModelParams& params,
                                              const Grid1D& grid, double dt,
                                              const StepOptions& opts) {
    require_variant(params, Variant::two_eq);
    require_fields(state, grid.n_cells, 2);
    const std::size_t n = grid.n_cells;
    const double react = opts.disable_reaction ? 0.0 : 1.0;

    FieldState next;
    next.t = state.t + dt;
    next.u.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = state.u[i];
        next.u[i] = u + react * dt * (u * (1.0 - u) - params.d * u * state.v[i]);
    }
    next.v = implicit_degenerate_v_update(next.u, state.v, react * params.r, 1.0, dt, grid.dx);
    check_finite(next);

    StepReport rep;
    rep.t_new = next.t;
    rep.max_update = std::max(max_abs_diff(next.u, state.u), max_abs_diff(next.v, state.v));
    return {std::move(next), std::move(rep)};
}

std::pair<FieldState, StepReport> step_full(const FieldState& state, const ModelParams& params,
                                            const Grid1D& grid, double dt,
                                            const StepOptions& opts) {
    require_variant(params, Variant::full);
    require_fields(state, grid.n_cells, 3);
    const std::size_t n = grid.n_cells;
    const double react = opts.disable_reaction ? 0.0 : 1.0;
    const std::vector<double>& w = *state.w;

    FieldState next;
    next.t = state.t + dt;
    next.u.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = state.u[i];
        next.u[i] = u + react * dt * (u * (1.0 - u) - params.d * u * w[i]);
    }
    next.v = implicit_degenerate_v_update(next.u, state.v, react * params.r, *params.D, dt,
                                          grid.dx);

    // Acid reaction uses old-time v and w; only the Laplacian is implicit.
    std::vector<double> w_rhs(n);
    for (std::size_t i = 0; i < n; ++i)
        w_rhs[i] = w[i] + react * dt * (*params.c) * (state.v[i] - w[i]);
    next.w = implicit_laplacian_update(w_rhs, dt, grid.dx);
    check_finite(next);

    StepReport rep;
    rep.t_new = next.t;
    rep.max_update = std::max({max_abs_diff(next.u, state.u), max_abs_diff(next.v, state.v),
                               max_abs_diff(*next.w, w)});
    return {std::move(next), std::move(rep)};
}

std::pair<FieldState, StepReport> step_one_eq(const FieldState& state, const ModelParams& params,
                                              const Grid1D& grid, double dt,
                                              const StepOptions& opts) {
    require_variant(params, Variant::one_eq);
    require_fields(state, grid.n_cells, 1);
    const std::size_t n = grid.n_cells;
    const double d = params.d;
    const double react = opts.disable_reaction ? 0.0 : 1.0;
    const std::vector<double>& v = state.v;

    // Effective diffusion coefficient F(v) = d v on [0, 1/d), 1 on [1/d, 1];
    // the CFL guard uses the per-cell maximum rather than the global bound so
    // that the reference parameter sets (which satisfy F <= 1) run cleanly.
    double f_max = 0.0;
    for (double vi : v) f_max = std::max(f_max, d * vi < 1.0 ? d * vi : 1.0);
    const double cfl = f_max * dt / (grid.dx * grid.dx);

    StepReport rep;
    rep.cfl_number = cfl;
    if (cfl > 0.5) {
        const std::string msg =
            "effective diffusion CFL " + std::to_string(cfl) + " exceeds 1/2";
        if (opts.cfl_policy == CflPolicy::fail) fail(Errc::cfl_violation, msg);
        rep.warnings.push_back(std::string("CflViolation: ") + msg);
    }

    FieldState next;
    next.t = state.t + dt;
    next.v.resize(n);
    const double dt_dx2 = dt / (grid.dx * grid.dx);
    for (std::size_t i = 0; i < n; ++i) {
        const double vm = (i == 0) ? v[0] : v[i - 1];
        const double vp = (i + 1 == n) ? v[n - 1] : v[i + 1];
        const double vi = v[i];
        double h;
        if (d * vi < 1.0) {
            h = d * dt_dx2 *
                (0.5 * vi * (vp - 2.0 * vi + vm) + 0.5 * vp * (vp - vi) - 0.5 * vm * (vi - vm));
        } else {
            h = dt_dx2 * (vm - 2.0 * vi + vp);
        }
        next.v[i] = vi + react * dt * vi * (1.0 - vi) + h;
    }
    check_finite(next);
    rep.t_new = next.t;
    rep.max_update = max_abs_diff(next.v, v);
    return {std::move(next), std::move(rep)};
}

std::pair<FieldState, StepReport> step_epsilon(const FieldState& state, const ModelParams& params,
                                               const Grid1D& grid, double dt,
                                               const StepOptions& opts) {
    require_variant(params, Variant::epsilon);
    require_fields(state, grid.n_cells, 2);
    const std::size_t n = grid.n_cells;
    const double eps = *params.epsilon;
    const double react = opts.disable_reaction ? 0.0 : 1.0;

    StepReport rep;
    if (dt / eps > 1.0)
        rep.warnings.push_back("StiffnessWarning: dt/epsilon = " + std::to_string(dt / eps) +
                               " > 1, explicit u relaxation may overshoot");

    FieldState next;
    next.t = state.t + dt;
    next.u.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = state.u[i];
        next.u[i] = u + react * (dt / eps) * (u * (1.0 - u) - params.d * u * state.v[i]);
    }
    next.v = implicit_degenerate_v_update(next.u, state.v, react * 1.0, 1.0, dt, grid.dx);
    check_finite(next);

    rep.t_new = next.t;
    rep.max_update = std::max(max_abs_diff(next.u, state.u), max_abs_diff(next.v, state.v));
    return {std::move(next), std::move(rep)};
}

std::pair<FieldState, StepReport> step(const FieldState& state, const ModelParams& params,
                                       const Grid1D& grid, double dt, const StepOptions& opts) {
    switch (params.variant) {
    case Variant::full: return step_full(state, params, grid, dt, opts);
    case Variant::two_eq: return step_two_eq(state, params, grid, dt, opts);
    case Variant::one_eq: return step_one_eq(state, params, grid, dt, opts);
    case Variant::epsilon: return step_epsilon(state, params, grid, dt, opts);
    }
    fail(Errc::invalid_params, "unknown variant");
}

EvolveResult evolve(const FieldState& initial, const ModelParams& params, const Grid1D& grid,
                    const TimeControl& time, const StepOptions& opts,
                    const std::vector<StepObserver>& observers) {
    params.validate();
    time.validate();
    require_fields(initial, grid.n_cells, variant_field_count(params.variant));

    const long long n_steps = time.n_steps();
    std::vector<long long> snap_steps;
    snap_steps.reserve(time.snapshot_times.size());
    for (double s : time.snapshot_times) snap_steps.push_back(time.step_index_of(s));

    EvolveResult result;
    // Keyed by the warning kind (text before the first ':'); keeps the first
    // full message and counts repeats so per-step detail cannot pile up.
    std::map<std::string, std::pair<std::string, long long>> warning_counts;

    FieldState cur = initial;
    cur.t = 0.0;
    std::size_t next_snap = 0;
    auto take_snapshot = [&](long long step_idx) {
        while (next_snap < snap_steps.size() && snap_steps[next_snap] == step_idx) {
            result.snapshots.push_back(cur);
            ++next_snap;
        }
    };
    take_snapshot(0);

    for (long long k = 0; k < n_steps; ++k) {
        std::pair<FieldState, StepReport> stepped;
        try {
            stepped = step(cur, params, grid, time.dt, opts);
        } catch (const SimError& e) {
            throw SimError(e.code(), std::string(e.what()) + " (step " + std::to_string(k) +
                                         ", t = " + std::to_string(cur.t) + ")");
        }
        stepped.first.t = static_cast<double>(k + 1) * time.dt;
        for (const auto& w : stepped.second.warnings) {
            const std::string kind = w.substr(0, w.find(':'));
            auto [it, inserted] = warning_counts.try_emplace(kind, w, 0);
            ++it->second.second;
        }
        for (const auto& obs : observers) obs(cur, stepped.first, stepped.second);
        cur = std::move(stepped.first);
        take_snapshot(k + 1);
    }

    result.steps_taken = n_steps;
    for (const auto& [kind, entry] : warning_counts) {
        const auto& [msg, count] = entry;
        result.warnings.push_back(
            count == 1 ? msg : msg + " (" + std::to_string(count) + " steps)");
    }
    return result;
}

} // namespace ggsim
