#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cqed/entropy.hpp"
#include "cqed/evolve.hpp"
#include "cqed/model.hpp"

namespace cqed {

/** Named entropy time series over a common time grid, values in bits. */
class EntropyTrace {
public:
    EntropyTrace() = default;
    EntropyTrace(std::vector<double> times, std::vector<std::string> names,
                 std::vector<std::vector<double>> values);

    const std::vector<double>& times() const { return times_; }
    const std::vector<std::string>& names() const { return names_; }
    bool has(const std::string& name) const;
    const std::vector<double>& series(const std::string& name) const;
    const std::vector<double>& series(size_t column) const;

private:
    std::vector<double> times_;
    std::vector<std::string> names_;
    std::vector<std::vector<double>> values_;  // one series per name
};

/** Entropies of each trajectory sample for the given partitions. */
EntropyTrace entropy_trace(const Trajectory& traj, const StateSpace& space,
                           const std::vector<Bipartition>& parts);

/** Largest sampled value of the preset's series. */
double peak_entropy(const EntropyTrace& trace, const std::string& preset);

/**
 * Strict local maxima of the series as (time, value) pairs; a flat run
 * higher than both neighbours contributes its midpoint sample.
 */
std::vector<std::pair<double, double>> envelope(const EntropyTrace& trace,
                                                const std::string& preset);

/**
 * Mean spacing between quiet zones of the series: maximal contiguous runs
 * with value < eps are located and the gaps between consecutive zone
 * midpoints are averaged. Throws "horizon too short" if fewer than two
 * quiet zones exist.
 */
double envelope_period(const EntropyTrace& trace, const std::string& preset,
                       double eps = 0.02);

/** One sweep axis: a parameter name and its ascending grid values. */
struct ParamAxis {
    std::string name;
    std::vector<double> values;

    static ParamAxis linspace(std::string name, double lo, double hi,
                              int count);
};

struct SweepGrid {
    std::string x_name;
    std::string y_name;
    std::vector<double> x_values;
    std::vector<double> y_values;
    std::vector<std::vector<double>> peak;  // peak[yi][xi]

    double at(int yi, int xi) const { return peak[yi][xi]; }
};

struct SweepOptions {
    double horizon = 2e-5;  // seconds simulated per grid point
    double dt = 1e-9;
    int sample_every = 5;
    int threads = 0;  // 0 = hardware concurrency
};

/**
 * Peak entropy of `preset` over one full simulation per grid point.
 * Points are independent; results land in pre-indexed slots, so the
 * output does not depend on worker scheduling.
 */
SweepGrid sweep2d(const ParamAxis& x, const ParamAxis& y,
                  const ModelParams& fixed, const std::string& preset,
                  const SweepOptions& opts = {});

/**
 * Apply a parameter value by sweep-axis name. Accepts the model keys
 * plus "g_photon", which sets both photon couplings together.
 */
void apply_sweep_param(ModelParams& params, const std::string& name,
                       double value);

/**
 * Per-sample violation counts for the subsystem-entropy relations
 * observed at the symmetric operating point:
 *   S_up + S_down >= S_Omega >= S_up,  S_up = S_down
 *   S_Omega + S_omega >= S_joint >= S_omega >= S_Omega
 * A sample counts against a relation when it fails by more than `tol`.
 */
struct InequalityReport {
    long samples = 0;
    long photon_sum_below_pair = 0;        // S_up + S_down < S_Omega
    long pair_below_single = 0;            // S_Omega < S_up
    long photon_modes_differ = 0;          // |S_up - S_down| > tol
    long mixed_sum_below_joint = 0;        // S_Omega + S_omega < S_joint
    long joint_below_phonon = 0;           // S_joint < S_omega
    long phonon_below_photon = 0;          // S_omega < S_Omega

    bool ok() const;
    long total_violations() const;
};

InequalityReport check_inequalities(const EntropyTrace& trace,
                                    double tol = 1e-9);

/** Full single-run pipeline: trajectory, observables and entropy columns. */
struct TraceResult {
    std::vector<double> times;
    std::vector<double> norm;
    std::vector<double> energy;
    EntropyTrace entropy;
};

TraceResult simulate_trace(const ModelParams& params, double dt, long n_steps,
                           int sample_every,
                           const std::vector<Bipartition>& extra_parts = {});

// CSV emission, >= 12 significant digits, bit-reproducible across runs.
void write_trace_csv(std::ostream& out, const TraceResult& result);
void write_sweep_csv(std::ostream& out, const SweepGrid& grid);

}  // namespace cqed
