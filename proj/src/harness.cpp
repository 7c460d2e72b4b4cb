#include "cqed/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "cqed/config.hpp"

namespace cqed {

EntropyTrace::EntropyTrace(std::vector<double> times,
                           std::vector<std::string> names,
                           std::vector<std::vector<double>> values)
    : times_(std::move(times)),
      names_(std::move(names)),
      values_(std::move(values)) {
    if (names_.size() != values_.size()) {
        throw std::invalid_argument("EntropyTrace: name/series count mismatch");
    }
    for (const auto& series : values_) {
        if (series.size() != times_.size()) {
            throw std::invalid_argument(
                "EntropyTrace: series length differs from time grid");
        }
    }
}

bool EntropyTrace::has(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

const std::vector<double>& EntropyTrace::series(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw std::invalid_argument("EntropyTrace: unknown preset '" + name +
                                    "'");
    }
    return values_[static_cast<size_t>(it - names_.begin())];
}

const std::vector<double>& EntropyTrace::series(size_t column) const {
    return values_.at(column);
}

EntropyTrace entropy_trace(const Trajectory& traj, const StateSpace& space,
                           const std::vector<Bipartition>& parts) {
    std::vector<std::string> names;
    names.reserve(parts.size());
    for (const auto& p : parts) names.push_back(p.name);

    std::vector<std::vector<double>> values(
        parts.size(), std::vector<double>(traj.samples.size()));
    for (size_t t = 0; t < traj.samples.size(); ++t) {
        for (size_t c = 0; c < parts.size(); ++c) {
            values[c][t] = von_neumann_entropy(
                reduced_density(traj.samples[t], space, parts[c]));
        }
    }
    return EntropyTrace(traj.times, std::move(names), std::move(values));
}

double peak_entropy(const EntropyTrace& trace, const std::string& preset) {
    const auto& s = trace.series(preset);
    if (s.empty()) {
        throw std::invalid_argument("peak_entropy: empty trace");
    }
    return *std::max_element(s.begin(), s.end());
}

std::vector<std::pair<double, double>> envelope(const EntropyTrace& trace,
                                                const std::string& preset) {
    const auto& v = trace.series(preset);
    const auto& t = trace.times();
    std::vector<std::pair<double, double>> maxima;
    const size_t n = v.size();
    size_t i = 1;
    while (n >= 3 && i + 1 < n) {
        if (v[i] <= v[i - 1]) {
            ++i;
            continue;
        }
        // Rose above the left neighbour; extend across any plateau.
        size_t j = i;
        while (j + 1 < n && v[j + 1] == v[i]) ++j;
        if (j + 1 < n && v[j + 1] < v[i]) {
            const size_t mid = (i + j) / 2;
            maxima.emplace_back(t[mid], v[mid]);
        }
        i = j + 1;
    }
    return maxima;
}

double envelope_period(const EntropyTrace& trace, const std::string& preset,
                       double eps) {
    // Quiet zones live on the wave-packet envelope, not the raw samples:
    // the fast oscillation dips near zero inside every packet, but its
    // local maxima stay above eps except where the envelope itself closes.
    const auto env = envelope(trace, preset);

    // Midpoints of maximal runs of envelope points with value < eps.
    std::vector<double> quiet_mid;
    size_t i = 0;
    while (i < env.size()) {
        if (env[i].second >= eps) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j + 1 < env.size() && env[j + 1].second < eps) ++j;
        quiet_mid.push_back(0.5 * (env[i].first + env[j].first));
        i = j + 1;
    }
    if (quiet_mid.size() < 2) {
        throw std::runtime_error(
            "envelope_period: horizon too short (fewer than two quiet zones)");
    }
    double gap_sum = 0.0;
    for (size_t g = 1; g < quiet_mid.size(); ++g) {
        gap_sum += quiet_mid[g] - quiet_mid[g - 1];
    }
    return gap_sum / static_cast<double>(quiet_mid.size() - 1);
}

ParamAxis ParamAxis::linspace(std::string name, double lo, double hi,
                              int count) {
    if (count < 1) {
        throw std::invalid_argument("ParamAxis: count must be >= 1");
    }
    ParamAxis axis;
    axis.name = std::move(name);
    axis.values.reserve(count);
    if (count == 1) {
        axis.values.push_back(lo);
    } else {
        const double step = (hi - lo) / (count - 1);
        for (int i = 0; i < count; ++i) axis.values.push_back(lo + step * i);
    }
    return axis;
}

void apply_sweep_param(ModelParams& params, const std::string& name,
                       double value) {
    if (name == "g_photon") {
        params.g_up = value;
        params.g_down = value;
        return;
    }
    set_model_key(params, name, value);
}

SweepGrid sweep2d(const ParamAxis& x, const ParamAxis& y,
                  const ModelParams& fixed, const std::string& preset,
                  const SweepOptions& opts) {
    if (x.values.empty() || y.values.empty()) {
        throw std::invalid_argument("sweep2d: empty axis");
    }
    if (!std::is_sorted(x.values.begin(), x.values.end()) ||
        !std::is_sorted(y.values.begin(), y.values.end())) {
        throw std::invalid_argument("sweep2d: axis values must ascend");
    }

    const Bipartition part = [&] {
        for (const auto& p : preset_partitions()) {
            if (p.name == preset) return p;
        }
        throw ConfigError("sweep2d: unknown preset '" + preset + "'");
    }();

    const StateSpace space = enumerate_states(initial_support(), interaction_rules());
    const long n_steps = std::lround(opts.horizon / opts.dt);

    SweepGrid grid;
    grid.x_name = x.name;
    grid.y_name = y.name;
    grid.x_values = x.values;
    grid.y_values = y.values;
    grid.peak.assign(y.values.size(),
                     std::vector<double>(x.values.size(), 0.0));

    const int n_points = static_cast<int>(x.values.size() * y.values.size());
    auto point_job = [&](int index) {
        const int yi = index / static_cast<int>(x.values.size());
        const int xi = index % static_cast<int>(x.values.size());
        ModelParams params = fixed;
        apply_sweep_param(params, x.name, x.values[xi]);
        apply_sweep_param(params, y.name, y.values[yi]);
        const Trajectory traj =
            run(params, space, opts.dt, n_steps, opts.sample_every);
        const EntropyTrace trace = entropy_trace(traj, space, {part});
        grid.peak[yi][xi] = peak_entropy(trace, part.name);
    };

    int n_threads = opts.threads > 0
                        ? opts.threads
                        : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::clamp(n_threads, 1, n_points);

    if (n_threads == 1) {
        for (int i = 0; i < n_points; ++i) point_job(i);
        return grid;
    }

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n_points; i = next.fetch_add(1)) {
            try {
                point_job(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return grid;
}

bool InequalityReport::ok() const { return total_violations() == 0; }

long InequalityReport::total_violations() const {
    return photon_sum_below_pair + pair_below_single + photon_modes_differ +
           mixed_sum_below_joint + joint_below_phonon + phonon_below_photon;
}

InequalityReport check_inequalities(const EntropyTrace& trace, double tol) {
    const auto& s_pair = trace.series("S_Omega");
    const auto& s_up = trace.series("S_Omega_up");
    const auto& s_down = trace.series("S_Omega_down");
    const auto& s_ph = trace.series("S_omega");
    const auto& s_joint = trace.series("S_Omega_omega");

    InequalityReport report;
    report.samples = static_cast<long>(trace.times().size());
    for (size_t i = 0; i < trace.times().size(); ++i) {
        if (s_up[i] + s_down[i] < s_pair[i] - tol) {
            ++report.photon_sum_below_pair;
        }
        if (s_pair[i] < s_up[i] - tol) ++report.pair_below_single;
        if (std::abs(s_up[i] - s_down[i]) > tol) ++report.photon_modes_differ;
        if (s_pair[i] + s_ph[i] < s_joint[i] - tol) {
            ++report.mixed_sum_below_joint;
        }
        if (s_joint[i] < s_ph[i] - tol) ++report.joint_below_phonon;
        if (s_ph[i] < s_pair[i] - tol) ++report.phonon_below_photon;
    }
    return report;
}

TraceResult simulate_trace(const ModelParams& params, double dt, long n_steps,
                           int sample_every,
                           const std::vector<Bipartition>& extra_parts) {
    const StateSpace space = enumerate_states(initial_support(), interaction_rules());
    const ComplexMatrix h = build_hamiltonian(params, space);
    const Trajectory traj = run(params, space, dt, n_steps, sample_every);

    std::vector<Bipartition> parts = preset_partitions();
    parts.insert(parts.end(), extra_parts.begin(), extra_parts.end());

    TraceResult result;
    result.times = traj.times;
    result.norm.reserve(traj.samples.size());
    result.energy.reserve(traj.samples.size());
    for (const auto& psi : traj.samples) {
        const Observables obs = observables(psi, h);
        result.norm.push_back(obs.norm);
        result.energy.push_back(obs.energy);
    }
    result.entropy = entropy_trace(traj, space, parts);
    return result;
}

namespace {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

}  // namespace

void write_trace_csv(std::ostream& out, const TraceResult& result) {
    out << "t,norm,energy";
    for (const auto& name : result.entropy.names()) out << ',' << name;
    out << '\n';
    for (size_t i = 0; i < result.times.size(); ++i) {
        out << format_value(result.times[i]) << ','
            << format_value(result.norm[i]) << ','
            << format_value(result.energy[i]);
        for (size_t c = 0; c < result.entropy.names().size(); ++c) {
            out << ',' << format_value(result.entropy.series(c)[i]);
        }
        out << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const SweepGrid& grid) {
    out << "x,y,peak\n";
    for (size_t yi = 0; yi < grid.y_values.size(); ++yi) {
        for (size_t xi = 0; xi < grid.x_values.size(); ++xi) {
            out << format_value(grid.x_values[xi]) << ','
                << format_value(grid.y_values[yi]) << ','
                << format_value(grid.peak[yi][xi]) << '\n';
        }
    }
}

}  // namespace cqed
