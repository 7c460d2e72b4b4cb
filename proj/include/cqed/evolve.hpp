#pragma once

#include <vector>

#include "cqed/basis.hpp"
#include "cqed/model.hpp"
#include "cqed/numerics.hpp"

namespace cqed {

/** Complex amplitudes over the restricted basis. */
struct StateVector {
    std::vector<Complex> amplitudes;

    double norm() const;
};

/** Uniformly sampled states: times[i] = i * sample_every * dt. */
struct Trajectory {
    std::vector<double> times;
    std::vector<StateVector> samples;
};

/**
 * The separable initial configuration: equal-weight superposition of the
 * four bond-broken, separate-cavity states, signs alternating with the
 * down-spin orbital flag.
 */
StateVector initial_state(const StateSpace& space);

/** Single-step unitary exp(-i H dt / hbar) via expm_ptsim. */
ComplexMatrix propagator(const ComplexMatrix& h, double dt, double hbar,
                         int scaling_levels = 20, int taylor_order = 4);

/**
 * Advance the initial state through n_steps applications of the step
 * propagator, recording every sample_every-th state starting at t = 0.
 * Aborts if the norm drifts by more than 1e-6.
 */
Trajectory run(const ModelParams& params, const StateSpace& space, double dt,
               long n_steps, int sample_every);

struct Observables {
    double norm = 0.0;
    double energy = 0.0;  // real part of <psi|H|psi>
};

Observables observables(const StateVector& psi, const ComplexMatrix& h);

}  // namespace cqed
