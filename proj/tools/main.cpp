// openph: command-line front end for the experiment modules. One subcommand
// per experiment; results go out as CSV tables or standalone SVG plots.

#include <CLI11.hpp>

#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "openph/io/csv.hpp"
#include "openph/io/svg.hpp"
#include "openph/mechanics/circular.hpp"
#include "openph/mechanics/oscillator.hpp"
#include "openph/mechanics/pendulum.hpp"
#include "openph/mechanics/string.hpp"
#include "openph/numcore/series.hpp"
#include "openph/quantum/constants.hpp"
#include "openph/quantum/decay.hpp"
#include "openph/quantum/photoelectric.hpp"
#include "openph/quantum/schrodinger.hpp"
#include "openph/tables/tables.hpp"

namespace {

using openph::numcore::TimeSeries;
using openph::io::SvgMarkers;
using openph::io::SvgPlot;
using openph::io::SvgSeries;

struct OutputOptions {
    std::string path;  // empty = standard output
    std::string format = "csv";
    int precision = 12;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("-o,--output", out.path, "Output file (default: standard output)");
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "svg"}))
        ->capture_default_str();
    cmd->add_option("--precision", out.precision, "CSV significant digits")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
}

struct RunResult {
    TimeSeries table;
    std::vector<SvgPlot> panels;
    int grid_columns = 1;
    std::string name;
    std::string scalars;  // summary fragment, already formatted
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Hash of the full table (labels and value bits). Printed in the summary so
// tests can assert that csv and svg runs of one config saw identical data.
std::uint64_t fnv1a_table(const TimeSeries& t) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    const auto mix = [&h](unsigned char b) {
        h ^= b;
        h *= 0x100000001b3ull;
    };
    for (const auto& label : t.labels()) {
        for (char c : label) mix(static_cast<unsigned char>(c));
        mix(0);
    }
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            const auto bits = std::bit_cast<std::uint64_t>(t.at(i, j));
            for (int b = 0; b < 8; ++b) mix(static_cast<unsigned char>(bits >> (8 * b)));
        }
    return h;
}

SvgSeries series_from(const TimeSeries& t, std::size_t xcol, std::size_t ycol,
                      std::string label) {
    SvgSeries s;
    s.label = std::move(label);
    s.points.reserve(t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) s.points.push_back({t.at(i, xcol), t.at(i, ycol)});
    return s;
}

int emit(const RunResult& r, const OutputOptions& opt) {
    const std::uint64_t hash = fnv1a_table(r.table);

    std::ofstream file;
    std::ostream* sink = &std::cout;
    if (!opt.path.empty()) {
        file.open(opt.path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file: " + opt.path);
        sink = &file;
    }
    if (opt.format == "csv") {
        openph::io::write_csv(r.table, opt.precision, *sink);
    } else if (r.panels.size() == 1) {
        openph::io::write_svg(r.panels.front(), *sink);
    } else {
        openph::io::write_svg_grid(r.panels, r.grid_columns, *sink);
    }
    sink->flush();
    if (!*sink) throw std::runtime_error("write failed");

    char tag[32];
    std::snprintf(tag, sizeof(tag), "0x%016llx", static_cast<unsigned long long>(hash));
    std::cerr << r.name << ": rows=" << r.table.rows();
    if (!r.scalars.empty()) std::cerr << ' ' << r.scalars;
    std::cerr << " data=" << tag << '\n';
    return 0;
}

// ---------------------------------------------------------------- photo

struct PhotoFlags {
    double freq = 0.0;
    double threshold = 0.0;
};

RunResult build_photo(const PhotoFlags& f) {
    namespace q = openph::quantum;
    const q::PhotoelectricInput input{f.freq, f.threshold};
    input.validate();
    const auto consts = q::PhysicalConstants::codata2018();

    // Frequency sweep from the threshold up, with the queried frequency
    // spliced in so it appears as a row of its own.
    const double f_hi = 1.2 * std::max(f.freq, f.threshold);
    std::vector<double> freqs;
    for (int i = 0; i <= 100; ++i)
        freqs.push_back(f.threshold + (f_hi - f.threshold) * static_cast<double>(i) / 100.0);
    bool present = false;
    for (double v : freqs)
        if (v == f.freq) present = true;
    if (!present) {
        freqs.push_back(f.freq);
        std::sort(freqs.begin(), freqs.end());
        freqs.erase(std::unique(freqs.begin(), freqs.end()), freqs.end());
    }

    TimeSeries table({"f", "E_k", "v_max", "V_stop"});
    for (double v : freqs) {
        const q::PhotoelectricInput point{v, f.threshold};
        table.append({v, q::max_kinetic_energy(point, consts), q::max_speed(point, consts),
                      q::stopping_voltage(point, consts)});
    }

    SvgPlot plot;
    plot.title = "photoelectric stopping voltage";
    plot.x_label = "f [Hz]";
    plot.y_label = "V_stop [V]";
    plot.series.push_back(series_from(table, 0, 3, "V_stop"));

    RunResult r{std::move(table), {std::move(plot)}, 1, "photo", ""};
    r.scalars = "E_k = " + fmt(q::max_kinetic_energy(input, consts)) +
                " J v_max = " + fmt(q::max_speed(input, consts)) +
                " m/s V_stop = " + fmt(q::stopping_voltage(input, consts)) + " V";
    return r;
}

// ---------------------------------------------------------------- decay

struct DecayFlags {
    long long n0 = 10000;
    double half_life = 1220.0;
    double lambda = 0.0;
    bool lambda_given = false;
    double dt = 10.0;
    double tmax = 6000.0;
    std::uint64_t seed = 1;
};

RunResult build_decay(const DecayFlags& f) {
    namespace q = openph::quantum;
    const auto model = f.lambda_given
                           ? q::DecayModel::from_lambda(f.n0, f.lambda, f.dt, f.tmax)
                           : q::DecayModel::from_half_life(f.n0, f.half_life, f.dt, f.tmax);

    auto table = q::decay_simulate(model, f.seed);

    SvgPlot plot;
    plot.title = "radioactive decay";
    plot.x_label = "t [s]";
    plot.y_label = "nuclei";
    plot.series.push_back(series_from(table, 0, 1, "n_remaining"));
    plot.series.push_back(series_from(table, 0, 2, "n_analytic"));

    const std::size_t last = table.rows() - 1;
    std::string scalars = "lambda = " + fmt(model.lambda) + " 1/s";
    if (model.lambda > 0.0) scalars += " half_life = " + fmt(model.half_life()) + " s";
    scalars += " n_final = " + fmt(table.at(last, 1)) +
               " analytic_final = " + fmt(table.at(last, 2));
    return {std::move(table), {std::move(plot)}, 1, "decay", std::move(scalars)};
}

// ---------------------------------------------------------------- schrodinger

struct SchrodingerFlags {
    std::string potential = "square";
    double omega = 50.0;
    double barrier_height = 100.0;
    double barrier_width = 0.2;
    std::string file;
    int levels = 4;
    double xmin = 0.0;
    double xmax = 1.0;
    int n = 2001;
    double hbar = 1.0;
    double mass = 1.0;
};

RunResult build_schrodinger(const SchrodingerFlags& f) {
    namespace q = openph::quantum;
    const openph::numcore::Grid1D grid(f.xmin, f.xmax, f.n);

    q::PotentialSpec spec = q::SquareWell{};
    if (f.potential == "doublewell") {
        spec = q::DoubleWell{f.barrier_height, f.barrier_width};
    } else if (f.potential == "parabolic") {
        spec = q::Parabolic{f.omega};
    } else if (f.potential == "tabulated") {
        if (f.file.empty())
            throw std::invalid_argument("--file is required for --potential tabulated");
        std::ifstream in(f.file);
        if (!in) throw std::invalid_argument("cannot open potential file: " + f.file);
        spec = q::read_tabulated_potential(in);
    }
    q::validate_potential(spec, grid);
    if (f.levels < 1 || f.levels > grid.n() - 2)
        throw std::invalid_argument("--levels must be in [1, n-2]");

    const auto sol = q::solve_bound_states(spec, grid, f.levels, f.hbar, f.mass);

    std::vector<std::string> labels{"x", "V"};
    for (int j = 0; j < f.levels; ++j) labels.push_back("psi_" + std::to_string(j));
    TimeSeries table(std::move(labels));
    for (int i = 0; i < grid.n(); ++i) {
        std::vector<double> row{grid.point(i), sol.potential[static_cast<std::size_t>(i)]};
        for (int j = 0; j < f.levels; ++j)
            row.push_back(sol.wavefunctions[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        table.append(std::move(row));
    }

    // Wavefunctions drawn offset by their energies over the potential curve.
    double span = sol.energies.back() - sol.energies.front();
    if (!(span > 0.0)) span = std::max(std::abs(sol.energies.front()), 1.0);
    double peak = 0.0;
    for (const auto& psi : sol.wavefunctions)
        for (double v : psi) peak = std::max(peak, std::abs(v));
    const double scale = 0.35 * span / peak;

    SvgPlot plot;
    plot.title = "bound states";
    plot.x_label = "x";
    plot.y_label = "energy";
    plot.series.push_back(series_from(table, 0, 1, "V(x)"));
    for (int j = 0; j < f.levels; ++j) {
        SvgSeries s;
        s.label = "psi_" + std::to_string(j) + " (E=" + fmt(sol.energies[static_cast<std::size_t>(j)]) + ")";
        s.points.reserve(table.rows());
        for (std::size_t i = 0; i < table.rows(); ++i)
            s.points.push_back({table.at(i, 0),
                                sol.energies[static_cast<std::size_t>(j)] +
                                    scale * table.at(i, 2 + static_cast<std::size_t>(j))});
        plot.series.push_back(std::move(s));
    }

    std::string scalars;
    for (int j = 0; j < f.levels; ++j) {
        if (j) scalars += ' ';
        scalars += "E_" + std::to_string(j) + " = " + fmt(sol.energies[static_cast<std::size_t>(j)]);
    }
    return {std::move(table), {std::move(plot)}, 1, "schrodinger", std::move(scalars)};
}

// ---------------------------------------------------------------- circular

struct CircularFlags {
    double radius = 1.0;
    double omega = 1.0;
    double t0 = 0.0;
    double t1 = 0.0;
    bool t1_given = false;
    int samples = 1000;
};

RunResult build_circular(const CircularFlags& f) {
    namespace m = openph::mechanics;
    const m::CircularMotionParams params{f.radius, f.omega};
    params.validate();
    const double t1 = f.t1_given
                          ? f.t1
                          : f.t0 + 2.0 * std::numbers::pi / std::abs(f.omega);

    auto table = m::circular_trajectory(params, f.t0, t1, f.samples);

    SvgPlot plot;
    plot.title = "uniform circular motion";
    plot.x_label = "x [m]";
    plot.y_label = "y [m]";
    plot.series.push_back(series_from(table, 1, 2, "trajectory"));

    std::string scalars = "radius = " + fmt(f.radius) + " m omega = " + fmt(f.omega) +
                          " rad/s period = " + fmt(2.0 * std::numbers::pi / std::abs(f.omega)) +
                          " s";
    return {std::move(table), {std::move(plot)}, 1, "circular", std::move(scalars)};
}

// ---------------------------------------------------------------- oscillator

struct OscillatorFlags {
    double m = 1.0;
    double k = 1.0;
    double r = 0.2;
    double f0 = 1.0;
    double omega_d = 0.5;
    double x0 = 0.0;
    double v0 = 0.0;
    double dt = 0.0;
    bool dt_given = false;
    double tmax = 100.0;
    bool compare = false;
};

RunResult build_oscillator(const OscillatorFlags& f) {
    namespace m = openph::mechanics;
    const m::OscillatorParams params{f.m, f.k, f.r, f.f0, f.omega_d, f.x0, f.v0};
    params.validate();

    // Default step: 1/1000 of the fastest period in play.
    double w_fast = params.natural_frequency();
    if (f.omega_d > w_fast) w_fast = f.omega_d;
    const double dt = f.dt_given ? f.dt : 2.0 * std::numbers::pi / w_fast / 1000.0;
    if (!(dt > 0.0)) throw std::invalid_argument("--dt must be positive");
    if (!(f.tmax >= dt)) throw std::invalid_argument("--tmax must be at least dt");

    std::string scalars;
    const double stiffness = f.k - f.m * f.omega_d * f.omega_d;
    if (!(stiffness == 0.0 && f.r * f.omega_d == 0.0)) {
        scalars = "A_steady = " + fmt(m::steady_state_amplitude(params)) +
                  " m phase = " + fmt(m::steady_state_phase(params)) + " rad";
    }

    if (f.compare) {
        auto cmp = m::compare_analytic_numeric(params, dt, f.tmax);

        SvgPlot numeric, analytic, overlay, error;
        numeric.width = analytic.width = overlay.width = error.width = 480;
        numeric.height = analytic.height = overlay.height = error.height = 360;
        numeric.title = "numeric x(t)";
        analytic.title = "analytic x(t)";
        overlay.title = "overlay";
        error.title = "absolute error";
        for (auto* p : {&numeric, &analytic, &overlay, &error}) {
            p->x_label = "t [s]";
            p->y_label = "x [m]";
        }
        error.y_label = "|dx|";
        numeric.series.push_back(series_from(cmp.table, 0, 1, "x_numeric"));
        analytic.series.push_back(series_from(cmp.table, 0, 2, "x_analytic"));
        overlay.series.push_back(series_from(cmp.table, 0, 1, "x_numeric"));
        overlay.series.push_back(series_from(cmp.table, 0, 2, "x_analytic"));
        error.series.push_back(series_from(cmp.table, 0, 3, "abs_error"));

        if (!scalars.empty()) scalars += ' ';
        scalars += "max_tail_error = " + fmt(cmp.max_abs_error_tail) + " m";
        return {std::move(cmp.table),
                {std::move(numeric), std::move(analytic), std::move(overlay), std::move(error)},
                2,
                "oscillator",
                std::move(scalars)};
    }

    auto table = m::simulate_oscillator(params, dt, f.tmax);

    SvgPlot plot;
    plot.title = "forced damped oscillator";
    plot.x_label = "t [s]";
    plot.y_label = "x, v, a";
    plot.series.push_back(series_from(table, 0, 1, "x [m]"));
    plot.series.push_back(series_from(table, 0, 2, "v [m/s]"));
    plot.series.push_back(series_from(table, 0, 3, "a [m/s^2]"));
    return {std::move(table), {std::move(plot)}, 1, "oscillator", std::move(scalars)};
}

// ---------------------------------------------------------------- pendulum

struct PendulumFlags {
    double length = 1.0;
    double g = 9.80665;
    double theta0 = 0.5;
    double omega0 = 0.0;
    double dt = 0.0;
    bool dt_given = false;
    double tmax = 0.0;
    bool tmax_given = false;
};

RunResult build_pendulum(const PendulumFlags& f) {
    namespace m = openph::mechanics;
    const m::PendulumParams params{f.length, f.g, f.theta0, f.omega0};
    params.validate();

    const double period = params.small_angle_period();
    const double dt = f.dt_given ? f.dt : period / 1000.0;
    const double tmax = f.tmax_given ? f.tmax : 10.0 * period;
    if (!(dt > 0.0)) throw std::invalid_argument("--dt must be positive");
    if (!(tmax >= dt)) throw std::invalid_argument("--tmax must be at least dt");

    auto table = m::simulate_pendulum(params, dt, tmax);

    SvgPlot plot;
    plot.title = "plane pendulum";
    plot.x_label = "t [s]";
    plot.y_label = "theta [rad]";
    plot.series.push_back(series_from(table, 0, 1, "theta"));
    plot.series.push_back(series_from(table, 0, 3, "small angle"));

    std::string scalars = "T_small = " + fmt(period) + " s";
    return {std::move(table), {std::move(plot)}, 1, "pendulum", std::move(scalars)};
}

// ---------------------------------------------------------------- string

struct StringFlags {
    double tension = 100.0;
    double mu = 0.01;
    double length = 1.0;
    int mode = 1;
    double ym = 0.1;
    int frames = 25;
    int points = 201;
};

RunResult build_string(const StringFlags& f) {
    namespace m = openph::mechanics;
    const m::StringParams params{f.length, f.tension, f.mu, f.ym, f.mode};
    params.validate();
    if (f.frames < 1) throw std::invalid_argument("--frames must be at least 1");
    if (f.points < 2) throw std::invalid_argument("--points must be at least 2");

    auto table = m::string_animation_frames(params, f.frames, f.points);

    SvgPlot plot;
    plot.title = "standing wave, mode " + std::to_string(f.mode);
    plot.x_label = "x [m]";
    plot.y_label = "y [m]";
    for (std::size_t r = 0; r < table.rows(); ++r) {
        SvgSeries s;
        s.opacity = r == 0 ? 1.0 : 0.35;
        s.in_legend = r == 0;
        if (r == 0) s.label = "frames over one period";
        s.points.reserve(static_cast<std::size_t>(f.points));
        for (int j = 0; j < f.points; ++j) {
            const double x =
                static_cast<double>(j) * f.length / static_cast<double>(f.points - 1);
            s.points.push_back({x, table.at(r, 1 + static_cast<std::size_t>(j))});
        }
        plot.series.push_back(std::move(s));
    }
    SvgMarkers nodes;
    nodes.label = "nodes";
    for (double x : m::node_positions(params)) nodes.points.push_back({x, 0.0});
    plot.markers.push_back(std::move(nodes));

    const m::StringParams fundamental{f.length, f.tension, f.mu, f.ym, 1};
    std::string scalars = "v = " + fmt(m::wave_speed(f.tension, f.mu)) +
                          " m/s f_1 = " + fmt(m::resonance_frequency(fundamental)) +
                          " Hz f_" + std::to_string(f.mode) + " = " +
                          fmt(m::resonance_frequency(params)) + " Hz";
    return {std::move(table), {std::move(plot)}, 1, "string", std::move(scalars)};
}

// ---------------------------------------------------------------- tables

struct TablesFlags {
    std::string kind = "fahrenheit";
    double start = -40.0;
    double stop = 120.0;
    double step = 10.0;
    int nmax = 20;
};

RunResult build_tables(const TablesFlags& f) {
    namespace t = openph::tables;
    const t::TableSpec spec{f.start, f.stop, f.step, f.nmax};

    if (f.kind == "stirling") {
        spec.validate_stirling();
        auto table = t::stirling_table(f.nmax);

        SvgPlot plot;
        plot.title = "Stirling approximation error";
        plot.x_label = "n";
        plot.y_label = "relative error";
        plot.series.push_back(series_from(table, 0, 3, "relative_error"));

        std::string scalars = "n_max = " + std::to_string(f.nmax) +
                              " last_rel_error = " + fmt(table.at(table.rows() - 1, 3));
        return {std::move(table), {std::move(plot)}, 1, "tables", std::move(scalars)};
    }

    spec.validate_temperature();
    auto table = t::fahrenheit_celsius_table(spec);

    SvgPlot plot;
    plot.title = "Fahrenheit vs Celsius";
    plot.x_label = "Celsius";
    plot.y_label = "Fahrenheit";
    plot.series.push_back(series_from(table, 0, 1, "fahrenheit"));

    std::string scalars = "range = [" + fmt(f.start) + ", " + fmt(f.stop) + "] step = " +
                          fmt(f.step);
    return {std::move(table), {std::move(plot)}, 1, "tables", std::move(scalars)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"openph: small quantum and classical physics experiments"};
    app.require_subcommand(1);

    PhotoFlags photo;
    auto* photo_cmd = app.add_subcommand("photo", "Photoelectric effect");
    photo_cmd->add_option("--freq", photo.freq, "Light frequency [Hz]")->required();
    photo_cmd->add_option("--threshold", photo.threshold, "Threshold frequency f0 [Hz]")
        ->required();
    OutputOptions photo_out;
    add_output_flags(photo_cmd, photo_out);

    DecayFlags decay;
    auto* decay_cmd = app.add_subcommand("decay", "Monte Carlo radioactive decay");
    decay_cmd->add_option("--n0", decay.n0, "Initial nucleus count")->capture_default_str();
    auto* hl_opt = decay_cmd->add_option("--half-life", decay.half_life, "Half-life [s]")
                       ->capture_default_str();
    auto* lam_opt =
        decay_cmd->add_option("--lambda", decay.lambda, "Decay constant [1/s] (overrides half-life)");
    lam_opt->excludes(hl_opt);
    decay_cmd->add_option("--dt", decay.dt, "Time step [s]")->capture_default_str();
    decay_cmd->add_option("--tmax", decay.tmax, "Simulated time span [s]")->capture_default_str();
    decay_cmd->add_option("--seed", decay.seed, "RNG seed")->capture_default_str();
    OutputOptions decay_out;
    add_output_flags(decay_cmd, decay_out);

    SchrodingerFlags schro;
    auto* schro_cmd = app.add_subcommand("schrodinger", "1D bound states in a box");
    schro_cmd->add_option("--potential", schro.potential, "Potential family")
        ->check(CLI::IsMember({"square", "doublewell", "parabolic", "tabulated"}))
        ->capture_default_str();
    schro_cmd->add_option("--omega", schro.omega, "Parabolic frequency (parabolic only)")
        ->capture_default_str();
    schro_cmd->add_option("--barrier-height", schro.barrier_height, "Barrier height (doublewell)")
        ->capture_default_str();
    schro_cmd
        ->add_option("--barrier-width", schro.barrier_width,
                     "Barrier width, same units as the box (doublewell)")
        ->capture_default_str();
    schro_cmd->add_option("--file", schro.file, "Potential samples, 'x,V' per line (tabulated)");
    schro_cmd->add_option("--levels", schro.levels, "Number of bound states")
        ->capture_default_str();
    schro_cmd->add_option("--xmin", schro.xmin, "Box lower edge")->capture_default_str();
    schro_cmd->add_option("--xmax", schro.xmax, "Box upper edge")->capture_default_str();
    schro_cmd->add_option("--n", schro.n, "Grid points")->capture_default_str();
    schro_cmd->add_option("--hbar", schro.hbar, "Reduced Planck constant")->capture_default_str();
    schro_cmd->add_option("--mass", schro.mass, "Particle mass")->capture_default_str();
    OutputOptions schro_out;
    add_output_flags(schro_cmd, schro_out);

    CircularFlags circular;
    auto* circ_cmd = app.add_subcommand("circular", "Uniform circular motion");
    circ_cmd->add_option("--radius", circular.radius, "Radius [m]")->capture_default_str();
    circ_cmd->add_option("--omega", circular.omega, "Angular velocity [rad/s]")
        ->capture_default_str();
    circ_cmd->add_option("--t0", circular.t0, "Start time [s]")->capture_default_str();
    auto* t1_opt =
        circ_cmd->add_option("--t1", circular.t1, "End time [s] (default: one revolution)");
    circ_cmd->add_option("--samples", circular.samples, "Sample count")->capture_default_str();
    OutputOptions circ_out;
    add_output_flags(circ_cmd, circ_out);

    OscillatorFlags osc;
    auto* osc_cmd = app.add_subcommand("oscillator", "Forced damped oscillator");
    osc_cmd->add_option("--m", osc.m, "Mass [kg]")->capture_default_str();
    osc_cmd->add_option("--k", osc.k, "Spring constant [N/m]")->capture_default_str();
    osc_cmd->add_option("--r", osc.r, "Damping coefficient [kg/s]")->capture_default_str();
    osc_cmd->add_option("--f0", osc.f0, "Drive amplitude [N]")->capture_default_str();
    osc_cmd->add_option("--omega-d", osc.omega_d, "Drive frequency [rad/s]")
        ->capture_default_str();
    osc_cmd->add_option("--x0", osc.x0, "Initial position [m]")->capture_default_str();
    osc_cmd->add_option("--v0", osc.v0, "Initial velocity [m/s]")->capture_default_str();
    auto* osc_dt =
        osc_cmd->add_option("--dt", osc.dt, "Time step [s] (default: fastest period / 1000)");
    osc_cmd->add_option("--tmax", osc.tmax, "Simulated time span [s]")->capture_default_str();
    osc_cmd->add_flag("--compare", osc.compare, "Tabulate numeric vs closed-form solution");
    OutputOptions osc_out;
    add_output_flags(osc_cmd, osc_out);

    PendulumFlags pend;
    auto* pend_cmd = app.add_subcommand("pendulum", "Plane pendulum (full nonlinear)");
    pend_cmd->add_option("--length", pend.length, "Length [m]")->capture_default_str();
    pend_cmd->add_option("--g", pend.g, "Gravitational acceleration [m/s^2]")
        ->capture_default_str();
    pend_cmd->add_option("--theta0", pend.theta0, "Initial angle [rad]")->capture_default_str();
    pend_cmd->add_option("--omega0", pend.omega0, "Initial angular velocity [rad/s]")
        ->capture_default_str();
    auto* pend_dt = pend_cmd->add_option("--dt", pend.dt,
                                         "Time step [s] (default: small-angle period / 1000)");
    auto* pend_tmax = pend_cmd->add_option(
        "--tmax", pend.tmax, "Simulated time span [s] (default: 10 small-angle periods)");
    OutputOptions pend_out;
    add_output_flags(pend_cmd, pend_out);

    StringFlags str;
    auto* str_cmd = app.add_subcommand("string", "Fixed-fixed string normal mode");
    str_cmd->add_option("--tension", str.tension, "Tension [N]")->capture_default_str();
    str_cmd->add_option("--mu", str.mu, "Linear density [kg/m]")->capture_default_str();
    str_cmd->add_option("--length", str.length, "Length [m]")->capture_default_str();
    str_cmd->add_option("--mode", str.mode, "Mode number n")->capture_default_str();
    str_cmd->add_option("--ym", str.ym, "Antinode amplitude [m]")->capture_default_str();
    str_cmd->add_option("--frames", str.frames, "Snapshots over one period")
        ->capture_default_str();
    str_cmd->add_option("--points", str.points, "Samples along the string")
        ->capture_default_str();
    OutputOptions str_out;
    add_output_flags(str_cmd, str_out);

    TablesFlags tab;
    auto* tab_cmd = app.add_subcommand("tables", "Utility tables");
    tab_cmd->add_option("--kind", tab.kind, "Table kind")
        ->check(CLI::IsMember({"fahrenheit", "stirling"}))
        ->capture_default_str();
    tab_cmd->add_option("--start", tab.start, "First Celsius value")->capture_default_str();
    tab_cmd->add_option("--stop", tab.stop, "Last Celsius value")->capture_default_str();
    tab_cmd->add_option("--step", tab.step, "Celsius increment")->capture_default_str();
    tab_cmd->add_option("--nmax", tab.nmax, "Largest n for the Stirling table")
        ->capture_default_str();
    OutputOptions tab_out;
    add_output_flags(tab_cmd, tab_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    decay.lambda_given = lam_opt->count() > 0;
    circular.t1_given = t1_opt->count() > 0;
    osc.dt_given = osc_dt->count() > 0;
    pend.dt_given = pend_dt->count() > 0;
    pend.tmax_given = pend_tmax->count() > 0;

    try {
        if (photo_cmd->parsed()) return emit(build_photo(photo), photo_out);
        if (decay_cmd->parsed()) return emit(build_decay(decay), decay_out);
        if (schro_cmd->parsed()) return emit(build_schrodinger(schro), schro_out);
        if (circ_cmd->parsed()) return emit(build_circular(circular), circ_out);
        if (osc_cmd->parsed()) return emit(build_oscillator(osc), osc_out);
        if (pend_cmd->parsed()) return emit(build_pendulum(pend), pend_out);
        if (str_cmd->parsed()) return emit(build_string(str), str_out);
        if (tab_cmd->parsed()) return emit(build_tables(tab), tab_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
