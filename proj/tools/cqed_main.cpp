// Command-line front end: single simulations, 2-D parameter sweeps, basis
// validation and the built-in invariant checks, all emitting flat CSV.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cqed/config.hpp"
#include "cqed/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitConfig = 2;

struct ParamFlags {
    std::string config_path;
    std::map<std::string, double> overrides;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path,
                        "flat key=value parameter file");
        for (const char* key :
             {"hbar", "omega_up", "omega_down", "omega_ph", "g_up", "g_down",
              "g_bond", "zeta"}) {
            cmd->add_option_function<double>(
                std::string("--") + key,
                [this, key = std::string(key)](double v) { overrides[key] = v; },
                std::string("override parameter ") + key);
        }
    }

    cqed::ModelParams resolve() const {
        cqed::ModelParams params;
        if (!config_path.empty()) {
            params = cqed::load_params_file(config_path, params);
        }
        for (const auto& [key, value] : overrides) {
            cqed::set_model_key(params, key, value);
        }
        try {
            params.validate();
        } catch (const std::exception& e) {
            throw cqed::ConfigError(e.what());
        }
        return params;
    }
};

std::vector<int> parse_keep_list(const std::string& text) {
    std::vector<int> keep;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            const int q = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            keep.push_back(q);
        } catch (const std::exception&) {
            throw cqed::ConfigError("bad qubit index '" + item + "' in --keep");
        }
    }
    if (keep.empty()) throw cqed::ConfigError("--keep: empty qubit list");
    return keep;
}

std::string keep_column_name(const std::vector<int>& keep) {
    std::string name = "S_keep";
    for (int q : keep) name += "_" + std::to_string(q);
    return name;
}

std::unique_ptr<std::ofstream> open_output(const std::string& path,
                                           std::ostream** out) {
    if (path.empty() || path == "-") {
        *out = &std::cout;
        return nullptr;
    }
    auto file = std::make_unique<std::ofstream>(path);
    if (!*file) {
        throw cqed::ConfigError("cannot open output file '" + path + "'");
    }
    *out = file.get();
    return file;
}

int run_simulate(const ParamFlags& pf, double dt, long steps, int sample_every,
                 const std::vector<std::string>& keep_args,
                 const std::string& output) {
    const cqed::ModelParams params = pf.resolve();
    std::vector<cqed::Bipartition> extra;
    for (const auto& arg : keep_args) {
        cqed::Bipartition part;
        part.keep = parse_keep_list(arg);
        part.name = keep_column_name(part.keep);
        extra.push_back(std::move(part));
    }
    const cqed::TraceResult result =
        cqed::simulate_trace(params, dt, steps, sample_every, extra);
    std::ostream* out = nullptr;
    auto file = open_output(output, &out);
    cqed::write_trace_csv(*out, result);
    return kExitOk;
}

int run_sweep(const ParamFlags& pf, const std::string& x_name, double x_min,
              double x_max, int x_count, const std::string& y_name,
              double y_min, double y_max, int y_count,
              const std::string& preset, const cqed::SweepOptions& opts,
              const std::string& output) {
    const cqed::ModelParams fixed = pf.resolve();
    const auto x = cqed::ParamAxis::linspace(x_name, x_min, x_max, x_count);
    const auto y = cqed::ParamAxis::linspace(y_name, y_min, y_max, y_count);
    const cqed::SweepGrid grid = cqed::sweep2d(x, y, fixed, preset, opts);
    std::ostream* out = nullptr;
    auto file = open_output(output, &out);
    cqed::write_sweep_csv(*out, grid);
    return kExitOk;
}

int run_validate_basis() {
    const cqed::StateSpace space =
        cqed::enumerate_states(cqed::initial_support(), cqed::interaction_rules());
    for (int i = 0; i < space.dim(); ++i) {
        const cqed::BasisState& s = space.state(i);
        std::printf("%d %d %d %d %d %d %d %d\n", i, s.p1, s.p2, s.m, s.l1,
                    s.l2, s.L, s.k);
    }
    const auto& reference = cqed::reference_states();
    bool match = space.dim() == static_cast<int>(reference.size());
    if (match) {
        for (const auto& s : reference) {
            if (!space.contains(s)) {
                match = false;
                break;
            }
        }
    }
    if (!match) {
        std::fprintf(stderr,
                     "validate-basis: enumerated set differs from the "
                     "embedded reference\n");
        return kExitInvariant;
    }
    std::fprintf(stderr, "validate-basis: %d states, reference match\n",
                 space.dim());
    return kExitOk;
}

int run_check_invariants(const ParamFlags& pf, double dt, double horizon) {
    const cqed::ModelParams params = pf.resolve();
    int failures = 0;
    auto report = [&failures](const char* name, bool ok,
                              const std::string& detail = "") {
        std::printf("%-34s %s%s%s\n", name, ok ? "ok" : "FAIL",
                    detail.empty() ? "" : "  ", detail.c_str());
        if (!ok) ++failures;
    };
    char buf[160];

    const cqed::StateSpace space =
        cqed::enumerate_states(cqed::initial_support(), cqed::interaction_rules());
    {
        bool ok = space.dim() == 17;
        for (const auto& s : cqed::reference_states()) {
            ok = ok && space.contains(s);
        }
        report("basis matches reference set", ok);
    }
    {
        bool ok = true;
        for (const auto& s : space.states()) {
            if (s.L == 0 && s.k == 1) ok = false;
        }
        report("no formed-bond split-cavity state", ok);
    }

    const cqed::ComplexMatrix h = cqed::build_hamiltonian(params, space);
    report("hamiltonian exactly hermitian", h.hermiticity_defect() == 0.0);
    {
        const cqed::RwaReport rwa = cqed::validate_rwa(params);
        std::snprintf(buf, sizeof(buf), "photon %.3g, phonon %.3g",
                      rwa.ratio_photon, rwa.ratio_phonon);
        report("rotating-wave ratios below 0.1", rwa.ok, buf);
    }
    {
        const cqed::ComplexMatrix u = cqed::propagator(h, dt, params.hbar);
        const double defect =
            (u.adjoint() * u - cqed::ComplexMatrix::identity(space.dim()))
                .frobenius_norm();
        std::snprintf(buf, sizeof(buf), "defect %.3e", defect);
        report("step propagator unitary", defect <= 1e-11, buf);
    }

    const long steps = std::lround(horizon / dt);
    const cqed::TraceResult r = cqed::simulate_trace(params, dt, steps, 1);
    {
        double worst = 0.0;
        for (double n : r.norm) worst = std::max(worst, std::abs(n - 1.0));
        std::snprintf(buf, sizeof(buf), "drift %.3e", worst);
        report("norm conserved", worst <= 1e-9, buf);
    }
    {
        double worst = 0.0;
        for (double e : r.energy) {
            worst = std::max(worst, std::abs(e - r.energy.front()) /
                                        std::abs(r.energy.front()));
        }
        std::snprintf(buf, sizeof(buf), "rel drift %.3e", worst);
        report("energy conserved", worst <= 1e-8, buf);
    }
    {
        bool ok = true;
        for (const auto& name : r.entropy.names()) {
            if (r.entropy.series(name).front() > 1e-12) ok = false;
        }
        report("initial state separable", ok);
    }
    {
        const cqed::InequalityReport rep = cqed::check_inequalities(r.entropy);
        std::snprintf(buf, sizeof(buf),
                      "phonon-below-photon-pair %ld of %ld samples (photon "
                      "pair crests above one bit; single-qubit bound)",
                      rep.phonon_below_photon, rep.samples);
        cqed::InequalityReport strict = rep;
        strict.phonon_below_photon = 0;
        report("subsystem entropy relations", strict.ok(),
               rep.phonon_below_photon > 0 ? buf : "");
    }

    if (failures > 0) {
        std::printf("%d invariant check(s) failed\n", failures);
        return kExitInvariant;
    }
    std::printf("all invariant checks passed\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "entropic dynamics of a seven-qubit two-cavity register: reachable "
        "basis, unitary evolution, subsystem entropies, parameter sweeps"};
    app.require_subcommand(1);

    auto* simulate = app.add_subcommand(
        "simulate", "run one trajectory and emit a t,norm,energy,entropy CSV");
    ParamFlags sim_params;
    sim_params.attach(simulate);
    double sim_dt = 1e-9;
    long sim_steps = 10000;
    int sim_sample_every = 1;
    std::vector<std::string> sim_keeps;
    std::string sim_output;
    simulate->add_option("--dt", sim_dt, "time step [s]")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--steps", sim_steps, "number of steps")
        ->check(CLI::NonNegativeNumber);
    simulate->add_option("--sample-every", sim_sample_every,
                         "record every n-th step")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--keep", sim_keeps,
                         "extra entropy column: comma-separated qubit "
                         "positions (repeatable)");
    simulate->add_option("-o,--output", sim_output,
                         "output file (default stdout)");

    auto* sweep = app.add_subcommand(
        "sweep", "peak entropy over a 2-D parameter grid, x,y,peak CSV");
    ParamFlags sweep_params;
    sweep_params.attach(sweep);
    std::string sweep_x = "g_photon";
    std::string sweep_y = "zeta";
    double sweep_x_min = 0.5e7, sweep_x_max = 4e7;
    double sweep_y_min = 0.5e7, sweep_y_max = 4e7;
    int sweep_x_count = 21, sweep_y_count = 21;
    std::string sweep_preset = "S_Omega";
    cqed::SweepOptions sweep_opts;
    std::string sweep_output;
    sweep->add_option("--x-param", sweep_x,
                      "x-axis parameter (model key or g_photon)");
    sweep->add_option("--x-min", sweep_x_min, "x-axis start");
    sweep->add_option("--x-max", sweep_x_max, "x-axis end");
    sweep->add_option("--x-count", sweep_x_count, "x-axis point count")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--y-param", sweep_y,
                      "y-axis parameter (model key or g_photon)");
    sweep->add_option("--y-min", sweep_y_min, "y-axis start");
    sweep->add_option("--y-max", sweep_y_max, "y-axis end");
    sweep->add_option("--y-count", sweep_y_count, "y-axis point count")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--preset", sweep_preset, "entropy preset to maximize");
    sweep->add_option("--horizon", sweep_opts.horizon,
                      "simulated time per point [s]")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--dt", sweep_opts.dt, "time step [s]")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--sample-every", sweep_opts.sample_every,
                      "record every n-th step")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--threads", sweep_opts.threads,
                      "worker threads (0 = hardware)");
    sweep->add_option("-o,--output", sweep_output,
                      "output file (default stdout)");

    app.add_subcommand("validate-basis",
                       "print the enumerated basis and compare to the "
                       "embedded reference");

    auto* check = app.add_subcommand("check-invariants",
                                     "run the built-in property suite");
    ParamFlags check_params;
    check_params.attach(check);
    double check_dt = 1e-9;
    double check_horizon = 1e-5;
    check->add_option("--dt", check_dt, "time step [s]")
        ->check(CLI::PositiveNumber);
    check->add_option("--horizon", check_horizon, "simulated time [s]")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(sim_params, sim_dt, sim_steps,
                                sim_sample_every, sim_keeps, sim_output);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_params, sweep_x, sweep_x_min, sweep_x_max,
                             sweep_x_count, sweep_y, sweep_y_min, sweep_y_max,
                             sweep_y_count, sweep_preset, sweep_opts,
                             sweep_output);
        }
        if (app.get_subcommand("validate-basis")->parsed()) {
            return run_validate_basis();
        }
        if (check->parsed()) {
            return run_check_invariants(check_params, check_dt, check_horizon);
        }
    } catch (const cqed::ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvariant;
    }
    return kExitConfig;
}
