#pragma once

#include <string>
#include <vector>

#include "cqed/basis.hpp"
#include "cqed/evolve.hpp"
#include "cqed/numerics.hpp"

namespace cqed {

/**
 * Kept-qubit subset of the register. Positions: 0 = up-mode photon,
 * 1 = down-mode photon, 2 = phonon, 3 = up-spin orbital, 4 = down-spin
 * orbital, 5 = bond flag, 6 = nuclei flag. Must be a non-empty proper
 * subset; the kept order fixes the row ordering of the reduction,
 * first position most significant.
 */
struct Bipartition {
    std::vector<int> keep;
    std::string name;
};

/**
 * Reduced density matrix of the kept qubits for an n-qubit register given
 * its full amplitude vector (length 2^n_qubits, big-endian index):
 * rho[i][j] = sum_env amp(i ^ env) * conj(amp(j ^ env)), where i, j run
 * over kept-qubit configurations and env over the traced ones.
 */
ComplexMatrix reduced_density_full(const std::vector<Complex>& amplitudes,
                                   int n_qubits,
                                   const std::vector<int>& keep);

/**
 * Reduction of |psi><psi| onto the kept qubits, reading amplitudes through
 * the restricted-to-full index map (zero outside the reachable set). The
 * result is Hermitian with unit trace for normalized psi.
 */
ComplexMatrix reduced_density(const StateVector& psi, const StateSpace& space,
                              const Bipartition& part);

/**
 * -sum_i lambda_i log2(lambda_i) over the eigenvalues of rho, in bits.
 * Eigenvalues below 1e-12 are treated as exact zeros; an eigenvalue below
 * -1e-8 signals a corrupted input and throws.
 */
double von_neumann_entropy(const ComplexMatrix& rho);

/**
 * The five standard subsystem choices: both photon modes, each photon
 * mode alone, the phonon mode, and photons plus phonon.
 */
const std::vector<Bipartition>& preset_partitions();

}  // namespace cqed
