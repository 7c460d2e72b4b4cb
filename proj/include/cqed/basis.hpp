#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cqed {

struct ModelParams;

/**
 * Occupation tuple naming one configuration of the seven-mode register:
 * two photon modes, one phonon mode, two electron orbital flags, the
 * covalent-bond flag (L=0 bond formed) and the nuclei flag (k=0 same cavity).
 */
struct BasisState {
    int p1 = 0;  // photons, up-spin mode
    int p2 = 0;  // photons, down-spin mode
    int m = 0;   // phonons
    int l1 = 0;  // up-spin electron in excited orbital
    int l2 = 0;  // down-spin electron in excited orbital
    int L = 0;   // 0 = bond formed, 1 = bond broken
    int k = 0;   // 0 = nuclei in one cavity, 1 = different cavities

    std::array<int, 7> as_array() const { return {p1, p2, m, l1, l2, L, k}; }

    auto operator<=>(const BasisState&) const = default;

    // All fields non-negative, flag fields binary.
    bool valid(int occupation_cap = 4) const;

    std::string to_string() const;
};

/**
 * One interaction channel: a guarded field transition with a coupling
 * amplitude. `apply` is only meaningful where `guard` holds; the reverse
 * direction undoes the transition, so apply/reverse_apply form an
 * involution pair on their guard domains.
 */
struct Rule {
    std::string label;
    std::function<bool(const BasisState&)> guard;
    std::function<BasisState(const BasisState&)> apply;
    std::function<bool(const BasisState&)> reverse_guard;
    std::function<BasisState(const BasisState&)> reverse_apply;
    // Matrix element between a state satisfying `guard` and its image.
    std::function<double(const ModelParams&, const BasisState&)> amplitude;
};

using RuleSet = std::vector<Rule>;

/**
 * Ordered reachable basis. Ordering is deterministic: breadth-first from
 * the initial support, ties within a BFS layer broken by ascending
 * lexicographic order on (p1,p2,m,l1,l2,L,k).
 */
class StateSpace {
public:
    explicit StateSpace(std::vector<BasisState> states);

    int dim() const { return static_cast<int>(states_.size()); }
    const std::vector<BasisState>& states() const { return states_; }
    const BasisState& state(int restricted_index) const;

    // Restricted index of a state; throws if the state is not in the space.
    int index_of(const BasisState& s) const;
    bool contains(const BasisState& s) const;

    // Position of the restricted state in the full 2^7 register, [0, 128).
    int full_index_of(int restricted_index) const;

private:
    std::vector<BasisState> states_;
    std::map<std::array<int, 7>, int> index_;
};

/**
 * Pack a binary-occupation state into its 2^7 register index, big-endian:
 * 64*p1 + 32*p2 + 16*m + 8*l1 + 4*l2 + 2*L + k. Throws if any occupation
 * exceeds 1.
 */
int full_index(const BasisState& s);

// Inverse of full_index over [0, 128).
BasisState unpack_full_index(int index);

/**
 * Least fixed point of applying every rule forward and reverse starting
 * from `initial`. States whose maximum occupation would exceed
 * `occupation_cap` abort the closure (guards against non-terminating
 * rule sets).
 */
StateSpace enumerate_states(const std::vector<BasisState>& initial,
                            const RuleSet& rules, int occupation_cap = 4);

// The 17 reachable states of the standard model, in the reference order.
const std::vector<BasisState>& reference_states();

// Index of `s` within reference_states(); throws if absent.
int reference_index_of(const BasisState& s);

// The four components of the initial support (bond broken, separate cavities).
std::vector<BasisState> initial_support();

}  // namespace cqed
