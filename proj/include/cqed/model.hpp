#pragma once

#include <utility>
#include <vector>

#include "cqed/basis.hpp"
#include "cqed/numerics.hpp"

namespace cqed {

/**
 * Physical parameters of the two-cavity bond/phonon model. Frequencies are
 * angular [rad/s], couplings carry energy units (hbar defaults to 1 so the
 * two coincide numerically).
 */
struct ModelParams {
    double hbar = 1.0;
    double omega_up = 1e9;    // photon mode, up-spin transition
    double omega_down = 1e9;  // photon mode, down-spin transition
    double omega_ph = 1e8;    // phonon mode
    double g_up = 1e7;        // photon coupling, up-spin mode
    double g_down = 1e7;      // photon coupling, down-spin mode
    double g_bond = 1e6;      // bond formation / breaking strength
    double zeta = 1e7;        // inter-cavity tunneling strength

    // Frequencies and hbar strictly positive, couplings non-negative.
    void validate() const;
};

/**
 * The four interaction channels of the model:
 *   R1  photon emission on up-spin orbital relaxation, gated on a formed bond
 *   R2  same for the down-spin orbital
 *   R3  bond formation releasing a phonon, gated on one-cavity nuclei and
 *       empty photon modes
 *   R4  nuclei tunneling between cavities, gated on a broken bond
 * Reverse directions arise from Hermitian assembly.
 */
RuleSet interaction_rules();

/**
 * Restricted Hamiltonian on `space`: diagonal from the mode number
 * operators, hbar*(Omega_up*(p1+l1) + Omega_down*(p2+l2) + omega*(m+L)),
 * off-diagonals from the rules, symmetrized. Throws if a rule maps a state
 * of `space` outside of it.
 */
ComplexMatrix build_hamiltonian(const ModelParams& params,
                                const StateSpace& space);

struct RwaReport {
    double ratio_photon = 0.0;
    double ratio_phonon = 0.0;
    bool ok = false;
};

/**
 * Rotating-wave validity ratios: max photon coupling over the smallest
 * photon frequency, and the bond coupling over the phonon frequency. Both
 * must stay below 0.1.
 */
RwaReport validate_rwa(const ModelParams& params);

/**
 * Interaction graph of the 17-state model in the reference numbering,
 * derived once by hand from the four rules. Pairs are (smaller, larger).
 */
const std::vector<std::pair<int, int>>& reference_edges();

}  // namespace cqed
