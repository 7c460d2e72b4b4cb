#include "cqed/evolve.hpp"

#include <cmath>
#include <stdexcept>

namespace cqed {

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

StateVector initial_state(const StateSpace& space) {
    StateVector psi;
    psi.amplitudes.assign(space.dim(), Complex{});
    // +1/2 on the ground down-spin components, -1/2 on the excited ones.
    const std::vector<std::pair<BasisState, double>> components = {
        {{0, 0, 0, 0, 0, 1, 1}, +0.5},
        {{0, 0, 0, 1, 0, 1, 1}, +0.5},
        {{0, 0, 0, 0, 1, 1, 1}, -0.5},
        {{0, 0, 0, 1, 1, 1, 1}, -0.5},
    };
    for (const auto& [state, amplitude] : components) {
        if (!space.contains(state)) {
            throw std::invalid_argument(
                "initial_state: component " + state.to_string() +
                " missing from the state space");
        }
        psi.amplitudes[space.index_of(state)] = amplitude;
    }
    return psi;
}

ComplexMatrix propagator(const ComplexMatrix& h, double dt, double hbar,
                         int scaling_levels, int taylor_order) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("propagator: dt must be positive");
    }
    if (!(hbar > 0.0)) {
        throw std::invalid_argument("propagator: hbar must be positive");
    }
    const ComplexMatrix a = h * Complex(0.0, -dt / hbar);
    return expm_ptsim(a, scaling_levels, taylor_order);
}

Trajectory run(const ModelParams& params, const StateSpace& space, double dt,
               long n_steps, int sample_every) {
    if (n_steps < 0) {
        throw std::invalid_argument("run: negative step count");
    }
    if (sample_every < 1) {
        throw std::invalid_argument("run: sample_every must be >= 1");
    }

    const ComplexMatrix h = build_hamiltonian(params, space);
    const ComplexMatrix u = propagator(h, dt, params.hbar);

    StateVector psi = initial_state(space);
    Trajectory traj;
    traj.times.reserve(static_cast<size_t>(n_steps / sample_every) + 1);
    traj.times.push_back(0.0);
    traj.samples.push_back(psi);

    for (long step = 1; step <= n_steps; ++step) {
        psi.amplitudes = u.apply(psi.amplitudes);
        const double drift = std::abs(psi.norm() - 1.0);
        if (drift > 1e-6) {
            throw std::runtime_error(
                "run: norm drift " + std::to_string(drift) + " at step " +
                std::to_string(step) +
                "; check dt and the propagator scaling depth");
        }
        if (step % sample_every == 0) {
            traj.times.push_back(static_cast<double>(step) * dt);
            traj.samples.push_back(psi);
        }
    }
    return traj;
}

Observables observables(const StateVector& psi, const ComplexMatrix& h) {
    if (static_cast<int>(psi.amplitudes.size()) != h.rows()) {
        throw std::invalid_argument("observables: dimension mismatch");
    }
    Observables out;
    out.norm = psi.norm();
    const std::vector<Complex> hpsi = h.apply(psi.amplitudes);
    Complex e = 0.0;
    for (size_t i = 0; i < hpsi.size(); ++i) {
        e += std::conj(psi.amplitudes[i]) * hpsi[i];
    }
    out.energy = e.real();
    return out;
}

}  // namespace cqed
