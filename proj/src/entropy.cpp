#include "cqed/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cqed {

namespace {

void require_keep_set(const std::vector<int>& keep, int n_qubits) {
    if (keep.empty()) {
        throw std::invalid_argument("reduced_density: empty keep set");
    }
    if (static_cast<int>(keep.size()) >= n_qubits) {
        throw std::invalid_argument(
            "reduced_density: keep set must be a proper subset");
    }
    std::vector<bool> used(n_qubits, false);
    for (int q : keep) {
        if (q < 0 || q >= n_qubits) {
            throw std::invalid_argument(
                "reduced_density: qubit position out of range");
        }
        if (used[q]) {
            throw std::invalid_argument(
                "reduced_density: duplicate qubit position");
        }
        used[q] = true;
    }
}

}  // namespace

ComplexMatrix reduced_density_full(const std::vector<Complex>& amplitudes,
                                   int n_qubits,
                                   const std::vector<int>& keep) {
    require_keep_set(keep, n_qubits);
    if (static_cast<size_t>(1) << n_qubits != amplitudes.size()) {
        throw std::invalid_argument(
            "reduced_density_full: amplitude length is not 2^n_qubits");
    }

    const int n_keep = static_cast<int>(keep.size());
    const int dim = 1 << n_keep;

    // Traced positions ascending; both groups big-endian within themselves.
    std::vector<int> traced;
    for (int q = 0; q < n_qubits; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
            traced.push_back(q);
        }
    }
    const int n_env = static_cast<int>(traced.size());
    const int env_dim = 1 << n_env;

    // full-register bit weight of position q (position 0 most significant)
    auto weight = [n_qubits](int q) { return 1 << (n_qubits - 1 - q); };

    // Precompose the register index contribution of each kept configuration
    // and each environment configuration.
    std::vector<int> keep_part(dim, 0);
    for (int i = 0; i < dim; ++i) {
        for (int b = 0; b < n_keep; ++b) {
            if ((i >> (n_keep - 1 - b)) & 1) keep_part[i] |= weight(keep[b]);
        }
    }
    std::vector<int> env_part(env_dim, 0);
    for (int e = 0; e < env_dim; ++e) {
        for (int b = 0; b < n_env; ++b) {
            if ((e >> (n_env - 1 - b)) & 1) env_part[e] |= weight(traced[b]);
        }
    }

    ComplexMatrix rho(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Complex acc = 0.0;
            for (int e = 0; e < env_dim; ++e) {
                acc += amplitudes[keep_part[i] | env_part[e]] *
                       std::conj(amplitudes[keep_part[j] | env_part[e]]);
            }
            rho(i, j) = acc;
        }
    }
    return rho;
}

ComplexMatrix reduced_density(const StateVector& psi, const StateSpace& space,
                              const Bipartition& part) {
    if (static_cast<int>(psi.amplitudes.size()) != space.dim()) {
        throw std::invalid_argument("reduced_density: dimension mismatch");
    }
    std::vector<Complex> full(128, Complex{});
    for (int i = 0; i < space.dim(); ++i) {
        full[space.full_index_of(i)] = psi.amplitudes[i];
    }
    return reduced_density_full(full, 7, part.keep);
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    const std::vector<double> eig = eigvals_hermitian(rho);
    double s = 0.0;
    for (double lambda : eig) {
        if (lambda < -1e-8) {
            throw std::domain_error(
                "von_neumann_entropy: eigenvalue " + std::to_string(lambda) +
                " below -1e-8; input is not a density matrix");
        }
        if (lambda < 1e-12) continue;
        s -= lambda * std::log2(lambda);
    }
    return s;
}

const std::vector<Bipartition>& preset_partitions() {
    static const std::vector<Bipartition> presets = {
        {{0, 1}, "S_Omega"},
        {{0}, "S_Omega_up"},
        {{1}, "S_Omega_down"},
        {{2}, "S_omega"},
        {{0, 1, 2}, "S_Omega_omega"},
    };
    return presets;
}

}  // namespace cqed
