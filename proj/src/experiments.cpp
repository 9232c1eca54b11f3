#include "ggsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <semaphore>
#include <sstream>
#include <thread>

#include "ggsim/errors.hpp"

namespace ggsim {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace

void ExperimentSpec::validate() const {
    params.validate();
    if (grid.n_cells == 0) fail(Errc::invalid_spec, "grid has no cells");
    time.validate();
    const std::size_t nf = variant_field_count(params.variant);
    if (initial.left.size() != nf || initial.right.size() != nf)
        fail(Errc::invalid_spec, "Riemann states do not match the variant's field count");
    if (!(initial.x_jump > grid.x_left && initial.x_jump < grid.x_right))
        fail(Errc::jump_outside_domain, "x_jump must lie strictly inside the domain");
    if (analyses.count(Analysis::exact_compare) &&
        !(params.variant == Variant::one_eq && params.d < 1.0))
        fail(Errc::invalid_spec,
             "exact-front comparison is only available for the one-equation model with d < 1");
    if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
        fail(Errc::invalid_spec, "tail_fraction must lie in (0, 1]");
    if (!(shape_knobs.eps_low < shape_knobs.eps_high))
        fail(Errc::invalid_spec, "eps_low must be smaller than eps_high");
}

double tumour_phi_jump(const ExperimentSpec& spec) {
    const std::size_t vi = (spec.params.variant == Variant::one_eq) ? 0 : 1;
    return spec.initial.right[vi] - spec.initial.left[vi];
}

std::vector<double> exact_front_on_grid(const ExperimentSpec& spec, double t) {
    std::vector<double> out(spec.grid.n_cells);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = exact_front(spec.grid.cell_center(i) - spec.initial.x_jump, t, spec.params.d);
    return out;
}

ExperimentResult run(const ExperimentSpec& spec) {
    try {
        spec.validate();

        ExperimentResult result;
        result.spec = spec;

        const FieldState init = riemann_initial(spec.grid, spec.params.variant, spec.initial.left,
                                                spec.initial.right, spec.initial.x_jump);

        std::vector<StepObserver> observers;
        std::optional<SpeedObserver> speed_obs;
        if (spec.analyses.count(Analysis::speed)) {
            speed_obs.emplace(spec.grid.dx, spec.time.dt, tumour_phi_jump(spec));
            observers.push_back(std::ref(*speed_obs));
        }

        EvolveResult evolved =
            evolve(init, spec.params, spec.grid, spec.time, spec.step_options, observers);
        result.snapshots = std::move(evolved.snapshots);
        result.warnings = std::move(evolved.warnings);

        if (speed_obs) {
            result.speed_series = speed_obs->series();
            if (!result.speed_series->values.empty()) {
                result.asymptotic_speed =
                    asymptotic_speed(*result.speed_series, spec.tail_fraction);
                result.speed_tail_spread =
                    speed_tail_spread(*result.speed_series, spec.tail_fraction);
            }
        }

        if (spec.analyses.count(Analysis::shape)) {
            std::vector<std::pair<double, std::vector<double>>> frames;
            frames.reserve(result.snapshots.size());
            for (const auto& s : result.snapshots) frames.emplace_back(s.t, s.v);
            result.shape = classify_front(frames, spec.grid, spec.shape_knobs);
        }

        if (spec.analyses.count(Analysis::exact_compare)) {
            const FieldState& last = result.snapshots.back();
            ExactComparison cmp;
            cmp.exact = exact_front_on_grid(spec, last.t);
            const ErrorNorms norms = error_norms(last.v, cmp.exact, spec.grid.dx);
            cmp.l_inf = norms.l_inf;
            cmp.l2 = norms.l2;
            result.exact_compare = std::move(cmp);
        }
        return result;
    } catch (const SimError& e) {
        throw SimError(e.code(), "[" + spec.name + "] " + e.what());
    }
}

const char* sweep_parameter_name(SweepParameter p) {
    switch (p) {
    case SweepParameter::r: return "r";
    case SweepParameter::d: return "d";
    case SweepParameter::epsilon: return "epsilon";
    }
    return "?";
}

std::optional<SweepParameter> sweep_parameter_from_name(const std::string& name) {
    if (name == "r") return SweepParameter::r;
    if (name == "d") return SweepParameter::d;
    if (name == "epsilon") return SweepParameter::epsilon;
    return std::nullopt;
}

namespace {

ExperimentSpec sweep_point_spec(const SweepSpec& spec, double value) {
    ExperimentSpec point = spec.base;
    point.name = spec.base.name + "[" + sweep_parameter_name(spec.parameter) + "=" + fmt(value) + "]";
    point.analyses = {Analysis::speed};
    switch (spec.parameter) {
    case SweepParameter::r: point.params.r = value; break;
    case SweepParameter::d: {
        point.params.d = value;
        // The stable left endpoint depends on d, so the Riemann data is
        // rebuilt per value.
        const RiemannStates states = canonical_invasion_states(point.params.variant, value);
        point.initial.left = states.left;
        point.initial.right = states.right;
        break;
    }
    case SweepParameter::epsilon: point.params.epsilon = value; break;
    }
    return point;
}

/// Runs jobs through a pool bounded by the hardware thread count; results are
/// collected by index so the output never depends on completion order.
template <typename Fn>
void run_indexed_pool(std::size_t count, Fn&& job) {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    std::counting_semaphore<> slots(static_cast<std::ptrdiff_t>(std::min(hw, count)));
    std::vector<std::future<void>> futures;
    futures.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        slots.acquire();
        futures.push_back(std::async(std::launch::async, [&job, &slots, i] {
            struct Release {
                std::counting_semaphore<>& s;
                ~Release() { s.release(); }
            } release{slots};
            job(i);
        }));
    }
    for (auto& f : futures) f.get();
}

} // namespace

std::vector<SweepPoint> sweep(const SweepSpec& spec) {
    if (spec.values.empty()) fail(Errc::invalid_spec, "sweep needs at least one value");
    const bool increasing = spec.values.size() < 2 || spec.values[1] > spec.values[0];
    for (std::size_t i = 1; i < spec.values.size(); ++i) {
        const bool ok = increasing ? spec.values[i] > spec.values[i - 1]
                                   : spec.values[i] < spec.values[i - 1];
        if (!ok) fail(Errc::invalid_spec, "sweep values must be strictly monotone");
    }
    const Variant variant = spec.base.params.variant;
    if (spec.parameter == SweepParameter::r &&
        (variant == Variant::one_eq || variant == Variant::epsilon))
        fail(Errc::invalid_spec, std::string(variant_name(variant)) + " fixes r = 1; cannot sweep r");
    if (spec.parameter == SweepParameter::epsilon && variant != Variant::epsilon)
        fail(Errc::invalid_spec, "epsilon sweeps require the epsilon system");

    std::vector<SweepPoint> points(spec.values.size());
    run_indexed_pool(spec.values.size(), [&](std::size_t i) {
        points[i].value = spec.values[i];
        try {
            const ExperimentResult res = run(sweep_point_spec(spec, spec.values[i]));
            points[i].speed = res.asymptotic_speed.value_or(0.0);
            points[i].tail_spread = res.speed_tail_spread.value_or(0.0);
        } catch (const SimError& e) {
            points[i].error = e.what();
        }
    });

    if (std::all_of(points.begin(), points.end(),
                    [](const SweepPoint& p) { return !p.error.empty(); }))
        fail(Errc::invalid_spec, "every sweep value failed; first error: " + points.front().error);
    return points;
}

std::vector<EpsilonPoint> epsilon_transition(const std::vector<double>& values,
                                             const ExperimentSpec& base) {
    if (values.empty()) fail(Errc::invalid_spec, "epsilon transition needs at least one value");
    if (base.params.variant != Variant::epsilon)
        fail(Errc::invalid_spec, "epsilon transition requires an epsilon-system base spec");
    if (!(base.params.d < 1.0))
        fail(Errc::invalid_spec,
             "epsilon transition compares against the exact front, which needs d < 1");

    ExperimentSpec prepared = base;
    if (prepared.time.snapshot_times.empty() ||
        prepared.time.snapshot_times.back() != prepared.time.t_final)
        prepared.time.snapshot_times.push_back(prepared.time.t_final);

    std::vector<EpsilonPoint> points(values.size());
    run_indexed_pool(values.size(), [&](std::size_t i) {
        ExperimentSpec point = prepared;
        point.params.epsilon = values[i];
        point.name = base.name + "[epsilon=" + fmt(values[i]) + "]";
        point.analyses = {Analysis::speed};
        const ExperimentResult res = run(point);
        points[i].epsilon = values[i];
        points[i].speed = res.asymptotic_speed.value_or(0.0);
        const std::vector<double> exact = exact_front_on_grid(point, point.time.t_final);
        points[i].l_inf_vs_exact =
            error_norms(res.snapshots.back().v, exact, point.grid.dx).l_inf;
    });
    return points;
}

std::vector<RefinementPoint> refinement_study(
    double d, const std::vector<std::pair<double, double>>& meshes) {
    if (!(d < 1.0))
        fail(Errc::invalid_spec, "refinement study needs d < 1 (exact front regime)");
    if (meshes.empty()) fail(Errc::invalid_spec, "refinement study needs at least one mesh");

    std::vector<RefinementPoint> points(meshes.size());
    run_indexed_pool(meshes.size(), [&](std::size_t i) {
        const auto [dx, dt] = meshes[i];
        ExperimentSpec spec = builtin_experiment("oneeq_heterogeneous");
        spec.name = "refine[dx=" + fmt(dx) + ",dt=" + fmt(dt) + "]";
        spec.params.d = d;
        spec.grid = make_grid(spec.grid.x_left, spec.grid.x_right, dx);
        spec.time = make_time_control(dt, spec.time.t_final, 2);
        spec.analyses = {Analysis::speed};
        const ExperimentResult res = run(spec);
        points[i].dx = dx;
        points[i].dt = dt;
        points[i].speed = res.asymptotic_speed.value_or(0.0);
        const std::vector<double> exact = exact_front_on_grid(spec, spec.time.t_final);
        points[i].l_inf_vs_exact =
            error_norms(res.snapshots.back().v, exact, spec.grid.dx).l_inf;
    });
    return points;
}

namespace {

constexpr double kFullModelAcidRate = 70.0;
constexpr std::size_t kDefaultSnapshots = 11;

ExperimentSpec make_builtin(const std::string& name, Variant variant, double d, double r,
                            std::optional<double> D, std::optional<double> c,
                            std::optional<double> epsilon, double x_left, double x_right,
                            double x_jump, double dx, double dt, double t_final,
                            std::set<Analysis> analyses) {
    ExperimentSpec spec;
    spec.name = name;
    spec.params.variant = variant;
    spec.params.d = d;
    spec.params.r = r;
    spec.params.D = D;
    spec.params.c = c;
    spec.params.epsilon = epsilon;
    spec.grid = make_grid(x_left, x_right, dx);
    spec.time = make_time_control(dt, t_final, kDefaultSnapshots);
    const RiemannStates states = canonical_invasion_states(variant, d);
    spec.initial = {states.left, states.right, x_jump};
    spec.analyses = std::move(analyses);
    return spec;
}

std::map<std::string, ExperimentSpec> build_registry() {
    std::map<std::string, ExperimentSpec> reg;
    auto add = [&reg](ExperimentSpec spec) { reg.emplace(spec.name, std::move(spec)); };

    // Full three-field model, homogeneous invasion (aggressive regime).
    add(make_builtin("full_homogeneous", Variant::full, 12.5, 1.0, 4e-5, kFullModelAcidRate,
                     std::nullopt, -1.0, 1.0, 0.0, 0.005, 0.005, 20.0,
                     {Analysis::speed, Analysis::shape}));

    // Rescaled two-equation reduction on a widened window.
    add(make_builtin("twoeq_heterogeneous", Variant::two_eq, 0.5, 1.0, std::nullopt, std::nullopt,
                     std::nullopt, 0.0, 40.0, 10.0, 0.005, 0.005, 20.0,
                     {Analysis::speed, Analysis::shape}));
    add(make_builtin("twoeq_homogeneous", Variant::two_eq, 2.0, 1.0, std::nullopt, std::nullopt,
                     std::nullopt, 0.0, 40.0, 10.0, 0.005, 0.005, 20.0,
                     {Analysis::speed, Analysis::shape}));

    // One-equation degenerate reduction.
    add(make_builtin("oneeq_heterogeneous", Variant::one_eq, 0.5, 1.0, std::nullopt, std::nullopt,
                     std::nullopt, 0.0, 40.0, 10.0, 0.05, 0.001, 20.0,
                     {Analysis::speed, Analysis::shape, Analysis::exact_compare}));
    add(make_builtin("oneeq_homogeneous", Variant::one_eq, 2.0, 1.0, std::nullopt, std::nullopt,
                     std::nullopt, 0.0, 40.0, 10.0, 0.05, 0.001, 20.0,
                     {Analysis::speed, Analysis::shape}));

    // Relaxed two-field system bridging the two reductions.
    add(make_builtin("epsilon_heterogeneous", Variant::epsilon, 0.5, 1.0, std::nullopt,
                     std::nullopt, 1.0, 0.0, 40.0, 10.0, 0.05, 0.001, 20.0,
                     {Analysis::speed}));
    return reg;
}

} // namespace

const std::map<std::string, ExperimentSpec>& builtin_experiments() {
    static const std::map<std::string, ExperimentSpec> registry = build_registry();
    return registry;
}

std::vector<std::string> builtin_experiment_names() {
    std::vector<std::string> names;
    for (const auto& [name, spec] : builtin_experiments()) names.push_back(name);
    return names;
}

const ExperimentSpec& builtin_experiment(const std::string& name) {
    const auto& reg = builtin_experiments();
    const auto it = reg.find(name);
    if (it == reg.end()) fail(Errc::unknown_experiment, "no builtin experiment named '" + name + "'");
    return it->second;
}

std::string builtin_experiment_summary(const std::string& name) {
    const ExperimentSpec& s = builtin_experiment(name);
    std::ostringstream os;
    os << name << ": " << variant_name(s.params.variant) << ", d=" << s.params.d
       << ", r=" << s.params.r;
    if (s.params.D) os << ", D=" << *s.params.D;
    if (s.params.c) os << ", c=" << *s.params.c;
    if (s.params.epsilon) os << ", epsilon=" << *s.params.epsilon;
    os << ", domain [" << s.grid.x_left << ", " << s.grid.x_right << "], dx=" << s.grid.dx
       << ", dt=" << s.time.dt << ", T=" << s.time.t_final;
    return os.str();
}

std::vector<double> default_sweep_values(SweepParameter p) {
    switch (p) {
    case SweepParameter::r: return {0.5, 1.0, 2.0, 3.0, 4.0, 5.0};
    case SweepParameter::d: return {0.5, 1.0, 2.0, 4.0, 8.0};
    case SweepParameter::epsilon: return {0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0};
    }
    return {};
}

std::vector<double> default_epsilon_values() {
    return {1.0, 0.5, 0.2, 0.1, 0.05, 0.02, 0.01};
}

std::vector<std::pair<double, double>> default_refinement_meshes() {
    return {{0.05, 0.001}, {0.01, 0.0001}};
}

} // namespace ggsim
