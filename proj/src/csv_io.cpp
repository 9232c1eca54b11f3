#include "ggsim/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ggsim/errors.hpp"

namespace ggsim {

namespace fs = std::filesystem;

std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::string format_short(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

void write_text(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::io_error, "cannot open " + path.string() + " for writing");
    out << content;
    if (!out) fail(Errc::io_error, "failed writing " + path.string());
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) fail(Errc::io_error, "cannot create directory " + dir.string() + ": " + ec.message());
}

std::string snapshot_filename(std::size_t index, double t) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "snapshot_%04zu_t%s.csv", index, format_short(t).c_str());
    return buf;
}

} // namespace

std::vector<fs::path> write_snapshots(const ExperimentResult& result, const fs::path& dir) {
    ensure_dir(dir);
    std::vector<fs::path> written;
    const ExperimentSpec& spec = result.spec;
    const bool has_w = spec.params.variant == Variant::full;
    const bool one_eq = spec.params.variant == Variant::one_eq;

    for (std::size_t k = 0; k < result.snapshots.size(); ++k) {
        const FieldState& s = result.snapshots[k];
        std::ostringstream os;
        os << (has_w ? "x,u,v,w\n" : "x,u,v\n");
        const std::vector<double> u_recovered =
            one_eq ? recover_healthy(s.v, spec.params.d) : std::vector<double>{};
        const std::vector<double>& u = one_eq ? u_recovered : s.u;
        for (std::size_t i = 0; i < s.v.size(); ++i) {
            os << format_full(spec.grid.cell_center(i)) << ',' << format_full(u[i]) << ','
               << format_full(s.v[i]);
            if (has_w) os << ',' << format_full((*s.w)[i]);
            os << '\n';
        }
        const fs::path path = dir / snapshot_filename(k, s.t);
        write_text(path, os.str());
        written.push_back(path);
    }

    if (result.speed_series) {
        std::ostringstream os;
        os << "t,s\n";
        for (const auto& [t, sp] : result.speed_series->values)
            os << format_full(t) << ',' << format_full(sp) << '\n';
        const fs::path path = dir / "speed_series.csv";
        write_text(path, os.str());
        written.push_back(path);
    }

    if (result.exact_compare) {
        const FieldState& last = result.snapshots.back();
        std::ostringstream os;
        os << "x,v_num,v_exact,abs_err\n";
        for (std::size_t i = 0; i < last.v.size(); ++i) {
            const double err = std::abs(last.v[i] - result.exact_compare->exact[i]);
            os << format_full(spec.grid.cell_center(i)) << ',' << format_full(last.v[i]) << ','
               << format_full(result.exact_compare->exact[i]) << ',' << format_full(err) << '\n';
        }
        const fs::path path = dir / "exact_vs_numeric.csv";
        write_text(path, os.str());
        written.push_back(path);
    }

    std::ostringstream rep;
    rep << "experiment = " << spec.name << "\n";
    rep << "variant = " << variant_name(spec.params.variant) << "\n";
    rep << "d = " << format_full(spec.params.d) << "\n";
    rep << "r = " << format_full(spec.params.r) << "\n";
    if (spec.params.D) rep << "D = " << format_full(*spec.params.D) << "\n";
    if (spec.params.c) rep << "c = " << format_full(*spec.params.c) << "\n";
    if (spec.params.epsilon) rep << "epsilon = " << format_full(*spec.params.epsilon) << "\n";
    rep << "dx = " << format_full(spec.grid.dx) << "\n";
    rep << "dt = " << format_full(spec.time.dt) << "\n";
    rep << "t_final = " << format_full(spec.time.t_final) << "\n";
    rep << "snapshots = " << result.snapshots.size() << "\n";
    if (result.asymptotic_speed) {
        rep << "asymptotic_speed = " << format_full(*result.asymptotic_speed) << "\n";
        rep << "speed_tail_spread = " << format_full(*result.speed_tail_spread) << "\n";
    }
    if (result.shape) {
        rep << "front_label = " << front_label_name(result.shape->label) << "\n";
        rep << "front_edge_position = " << format_full(result.shape->edge_position) << "\n";
        rep << "front_tail_length = " << format_full(result.shape->tail_length) << "\n";
        rep << "front_edge_slope = " << format_full(result.shape->edge_slope) << "\n";
    }
    if (result.exact_compare) {
        rep << "exact_l_inf = " << format_full(result.exact_compare->l_inf) << "\n";
        rep << "exact_l2 = " << format_full(result.exact_compare->l2) << "\n";
    }
    for (const auto& w : result.warnings) rep << "warning = " << w << "\n";
    const fs::path report_path = dir / "report.txt";
    write_text(report_path, rep.str());
    written.push_back(report_path);
    return written;
}

fs::path write_sweep_csv(const std::vector<SweepPoint>& points, const std::string& parameter_name,
                         const fs::path& dir) {
    ensure_dir(dir);
    std::ostringstream os;
    os << parameter_name << ",speed,tail_spread,error\n";
    for (const auto& p : points)
        os << format_full(p.value) << ',' << format_full(p.speed) << ','
           << format_full(p.tail_spread) << ',' << p.error << '\n';
    const fs::path path = dir / ("sweep_" + parameter_name + ".csv");
    write_text(path, os.str());
    return path;
}

fs::path write_epsilon_csv(const std::vector<EpsilonPoint>& points, const fs::path& dir) {
    ensure_dir(dir);
    std::ostringstream os;
    os << "epsilon,speed,l_inf\n";
    for (const auto& p : points)
        os << format_full(p.epsilon) << ',' << format_full(p.speed) << ','
           << format_full(p.l_inf_vs_exact) << '\n';
    const fs::path path = dir / "epsilon_transition.csv";
    write_text(path, os.str());
    return path;
}

fs::path write_refinement_csv(const std::vector<RefinementPoint>& points, const fs::path& dir) {
    ensure_dir(dir);
    std::ostringstream os;
    os << "dx,dt,speed,l_inf\n";
    for (const auto& p : points)
        os << format_full(p.dx) << ',' << format_full(p.dt) << ',' << format_full(p.speed) << ','
           << format_full(p.l_inf_vs_exact) << '\n';
    const fs::path path = dir / "refinement.csv";
    write_text(path, os.str());
    return path;
}

fs::path write_gnuplot_script(const ExperimentResult& result,
                              const std::vector<fs::path>& files, const fs::path& dir) {
    ensure_dir(dir);
    const bool has_w = result.spec.params.variant == Variant::full;
    std::ostringstream os;
    os << "set datafile separator ','\n";
    os << "set key left top\n";
    os << "set xlabel 'x'\n";
    os << "set terminal pngcairo size 900,600\n";

    os << "set output 'profiles.png'\n";
    os << "plot ";
    bool first = true;
    for (const auto& f : files) {
        const std::string name = f.filename().string();
        if (name.rfind("snapshot_", 0) != 0) continue;
        if (!first) os << ", \\\n     ";
        os << "'" << name << "' using 1:3 with lines title '" << name << " v'";
        first = false;
    }
    os << "\n";

    if (!result.snapshots.empty()) {
        os << "set output 'final_state.png'\n";
        std::string last_snapshot;
        for (const auto& f : files) {
            const std::string n = f.filename().string();
            if (n.rfind("snapshot_", 0) == 0) last_snapshot = n;
        }
        os << "plot '" << last_snapshot << "' using 1:2 with lines title 'u', '" << last_snapshot
           << "' using 1:3 with lines title 'v'";
        if (has_w) os << ", '" << last_snapshot << "' using 1:4 with lines title 'w'";
        os << "\n";
    }

    if (result.speed_series) {
        os << "set output 'speed.png'\n";
        os << "set xlabel 't'\n";
        os << "plot 'speed_series.csv' using 1:2 with lines title 's(t)'\n";
    }

    const fs::path path = dir / "plot.gp";
    write_text(path, os.str());
    return path;
}

} // namespace ggsim
