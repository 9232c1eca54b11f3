#include "ggsim/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ggsim/errors.hpp"

namespace ggsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail(Errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& value, int line) {
    const std::string v = trim(value);
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(x))
        parse_fail(line, "expected a finite number, got '" + value + "'");
    return x;
}

long long to_int(const std::string& value, int line) {
    const std::string v = trim(value);
    long long x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size())
        parse_fail(line, "expected an integer, got '" + value + "'");
    return x;
}

bool to_bool(const std::string& value, int line) {
    const std::string v = trim(value);
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    parse_fail(line, "expected on/off/true/false, got '" + value + "'");
}

std::vector<double> to_double_list(const std::string& value, int line) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double(item, line));
    if (out.empty()) parse_fail(line, "expected a comma-separated list of numbers");
    return out;
}

double positive(double x, const char* key, int line) {
    if (!(x > 0.0)) parse_fail(line, std::string(key) + " must be positive");
    return x;
}

double non_negative(double x, const char* key, int line) {
    if (x < 0.0) parse_fail(line, std::string(key) + " must be non-negative");
    return x;
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value, int line) {
    if (key == "experiment") {
        cfg.experiment = trim(value);
    } else if (key == "variant") {
        const std::string v = trim(value);
        if (!variant_from_name(v)) parse_fail(line, "unknown variant '" + v + "'");
        cfg.variant = v;
    } else if (key == "d") {
        cfg.d = non_negative(to_double(value, line), "d", line);
    } else if (key == "r") {
        cfg.r = non_negative(to_double(value, line), "r", line);
    } else if (key == "D") {
        cfg.D = non_negative(to_double(value, line), "D", line);
    } else if (key == "c") {
        cfg.c = positive(to_double(value, line), "c", line);
    } else if (key == "epsilon") {
        cfg.epsilon = positive(to_double(value, line), "epsilon", line);
    } else if (key == "x_left") {
        cfg.x_left = to_double(value, line);
    } else if (key == "x_right") {
        cfg.x_right = to_double(value, line);
    } else if (key == "dx") {
        cfg.dx = positive(to_double(value, line), "dx", line);
    } else if (key == "dt") {
        cfg.dt = positive(to_double(value, line), "dt", line);
    } else if (key == "t_final") {
        cfg.t_final = non_negative(to_double(value, line), "t_final", line);
    } else if (key == "x_jump") {
        cfg.x_jump = to_double(value, line);
    } else if (key == "snapshots") {
        const long long n = to_int(value, line);
        if (n < 1) parse_fail(line, "snapshots must be >= 1");
        cfg.snapshots = n;
    } else if (key == "analysis_speed") {
        cfg.analysis_speed = to_bool(value, line);
    } else if (key == "analysis_shape") {
        cfg.analysis_shape = to_bool(value, line);
    } else if (key == "analysis_exact") {
        cfg.analysis_exact = to_bool(value, line);
    } else if (key == "eps_high") {
        cfg.eps_high = positive(to_double(value, line), "eps_high", line);
    } else if (key == "eps_low") {
        cfg.eps_low = positive(to_double(value, line), "eps_low", line);
    } else if (key == "k_sharp") {
        cfg.k_sharp = positive(to_double(value, line), "k_sharp", line);
    } else if (key == "tail_fraction") {
        const double f = to_double(value, line);
        if (!(f > 0.0 && f <= 1.0)) parse_fail(line, "tail_fraction must lie in (0, 1]");
        cfg.tail_fraction = f;
    } else if (key == "cfl_policy") {
        const std::string v = trim(value);
        if (v != "warn" && v != "fail") parse_fail(line, "cfl_policy must be warn or fail");
        cfg.cfl_policy = v;
    } else if (key == "output_dir") {
        cfg.output_dir = trim(value);
    } else if (key == "parameter") {
        const std::string v = trim(value);
        if (!sweep_parameter_from_name(v)) parse_fail(line, "parameter must be r, d or epsilon");
        cfg.parameter = v;
    } else if (key == "values") {
        cfg.values = to_double_list(value, line);
    } else if (key == "meshes") {
        cfg.meshes = trim(value);
    } else {
        fail(Errc::unknown_key, "line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
}

void apply_line(RunConfig& cfg, std::string line_text, int line) {
    const std::size_t hash = line_text.find('#');
    if (hash != std::string::npos) line_text.erase(hash);
    line_text = trim(line_text);
    if (line_text.empty()) return;
    const std::size_t eq = line_text.find('=');
    if (eq == std::string::npos) parse_fail(line, "expected 'key = value'");
    const std::string key = trim(line_text.substr(0, eq));
    const std::string value = line_text.substr(eq + 1);
    if (key.empty()) parse_fail(line, "empty key");
    apply_key(cfg, key, value, line);
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string line_text;
    int line = 0;
    while (std::getline(ss, line_text)) {
        ++line;
        apply_line(cfg, line_text, line);
    }
    return cfg;
}

void apply_overrides(RunConfig& config, const std::vector<std::string>& overrides) {
    int idx = 0;
    for (const std::string& kv : overrides) apply_line(config, kv, ++idx);
}

std::string render_config(const RunConfig& c) {
    std::ostringstream os;
    auto put = [&os](const char* key, const auto& opt, auto&& fmt) {
        if (opt) os << key << " = " << fmt(*opt) << "\n";
    };
    auto as_is = [](const auto& v) { return v; };
    auto num = [](double v) { return fmt17(v); };
    auto boolean = [](bool v) { return v ? "true" : "false"; };

    put("experiment", c.experiment, as_is);
    put("variant", c.variant, as_is);
    put("d", c.d, num);
    put("r", c.r, num);
    put("D", c.D, num);
    put("c", c.c, num);
    put("epsilon", c.epsilon, num);
    put("x_left", c.x_left, num);
    put("x_right", c.x_right, num);
    put("dx", c.dx, num);
    put("dt", c.dt, num);
    put("t_final", c.t_final, num);
    put("x_jump", c.x_jump, num);
    put("snapshots", c.snapshots, [](long long v) { return std::to_string(v); });
    put("analysis_speed", c.analysis_speed, boolean);
    put("analysis_shape", c.analysis_shape, boolean);
    put("analysis_exact", c.analysis_exact, boolean);
    put("eps_high", c.eps_high, num);
    put("eps_low", c.eps_low, num);
    put("k_sharp", c.k_sharp, num);
    put("tail_fraction", c.tail_fraction, num);
    put("cfl_policy", c.cfl_policy, as_is);
    put("output_dir", c.output_dir, as_is);
    put("parameter", c.parameter, as_is);
    if (c.values) {
        os << "values = ";
        for (std::size_t i = 0; i < c.values->size(); ++i)
            os << (i ? "," : "") << fmt17((*c.values)[i]);
        os << "\n";
    }
    put("meshes", c.meshes, as_is);
    return os.str();
}

ExperimentSpec resolve_config(const RunConfig& cfg) {
    ExperimentSpec spec;
    if (cfg.experiment) {
        spec = builtin_experiment(*cfg.experiment);
        if (cfg.variant && *cfg.variant != variant_name(spec.params.variant))
            fail(Errc::invalid_spec, "variant cannot override the named experiment's variant");
    } else if (cfg.variant) {
        // Inline spec: start from the canonical defaults of the variant.
        static const std::map<std::string, std::string> canonical = {
            {"full", "full_homogeneous"},
            {"two_eq", "twoeq_heterogeneous"},
            {"one_eq", "oneeq_heterogeneous"},
            {"epsilon", "epsilon_heterogeneous"},
        };
        spec = builtin_experiment(canonical.at(*cfg.variant));
        spec.name = "inline_" + *cfg.variant;
    } else {
        fail(Errc::unknown_experiment, "config names no experiment (and no variant for an inline spec)");
    }

    if (cfg.d) spec.params.d = *cfg.d;
    if (cfg.r) spec.params.r = *cfg.r;
    if (cfg.D) spec.params.D = *cfg.D;
    if (cfg.c) spec.params.c = *cfg.c;
    if (cfg.epsilon) spec.params.epsilon = *cfg.epsilon;

    if (cfg.x_left || cfg.x_right || cfg.dx) {
        spec.grid = make_grid(cfg.x_left.value_or(spec.grid.x_left),
                              cfg.x_right.value_or(spec.grid.x_right),
                              cfg.dx.value_or(spec.grid.dx));
    }
    if (cfg.dt || cfg.t_final || cfg.snapshots) {
        const std::size_t count = cfg.snapshots
                                      ? static_cast<std::size_t>(*cfg.snapshots)
                                      : spec.time.snapshot_times.size();
        spec.time = make_time_control(cfg.dt.value_or(spec.time.dt),
                                      cfg.t_final.value_or(spec.time.t_final), count);
    }

    if (cfg.d) {
        const RiemannStates states =
            canonical_invasion_states(spec.params.variant, spec.params.d);
        spec.initial.left = states.left;
        spec.initial.right = states.right;
    }
    if (cfg.x_jump) spec.initial.x_jump = *cfg.x_jump;

    auto toggle = [&spec](const std::optional<bool>& flag, Analysis a) {
        if (!flag) return;
        if (*flag)
            spec.analyses.insert(a);
        else
            spec.analyses.erase(a);
    };
    toggle(cfg.analysis_speed, Analysis::speed);
    toggle(cfg.analysis_shape, Analysis::shape);
    toggle(cfg.analysis_exact, Analysis::exact_compare);
    // The exact-front comparison only exists in the d < 1 one-equation
    // regime; drop it silently when a d override leaves that regime unless
    // the config asked for it explicitly.
    if (!cfg.analysis_exact.value_or(false) &&
        !(spec.params.variant == Variant::one_eq && spec.params.d < 1.0))
        spec.analyses.erase(Analysis::exact_compare);

    if (cfg.eps_high) spec.shape_knobs.eps_high = *cfg.eps_high;
    if (cfg.eps_low) spec.shape_knobs.eps_low = *cfg.eps_low;
    if (cfg.k_sharp) spec.shape_knobs.k_sharp = *cfg.k_sharp;
    if (cfg.tail_fraction) spec.tail_fraction = *cfg.tail_fraction;
    if (cfg.cfl_policy)
        spec.step_options.cfl_policy =
            (*cfg.cfl_policy == "fail") ? CflPolicy::fail : CflPolicy::warn;

    spec.validate();
    return spec;
}

std::vector<std::pair<double, double>> parse_meshes(const std::string& text) {
    std::vector<std::pair<double, double>> meshes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            fail(Errc::parse_error, "mesh entries must look like dx:dt, got '" + item + "'");
        const double dx = to_double(item.substr(0, colon), 0);
        const double dt = to_double(item.substr(colon + 1), 0);
        if (!(dx > 0.0 && dt > 0.0)) fail(Errc::parse_error, "mesh sizes must be positive");
        meshes.emplace_back(dx, dt);
    }
    if (meshes.empty()) fail(Errc::parse_error, "empty mesh list");
    return meshes;
}

} // namespace ggsim
