#include "cqed/basis.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <set>
#include <stdexcept>

namespace cqed {

bool BasisState::valid(int occupation_cap) const {
    for (int v : {p1, p2, m}) {
        if (v < 0 || v > occupation_cap) return false;
    }
    for (int v : {l1, l2, L, k}) {
        if (v != 0 && v != 1) return false;
    }
    return true;
}

std::string BasisState::to_string() const {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "(%d,%d,%d,%d,%d,%d,%d)", p1, p2, m, l1,
                  l2, L, k);
    return buf;
}

StateSpace::StateSpace(std::vector<BasisState> states)
    : states_(std::move(states)) {
    for (int i = 0; i < static_cast<int>(states_.size()); ++i) {
        auto [it, inserted] = index_.emplace(states_[i].as_array(), i);
        if (!inserted) {
            throw std::invalid_argument("StateSpace: duplicate state " +
                                        states_[i].to_string());
        }
    }
}

const BasisState& StateSpace::state(int restricted_index) const {
    if (restricted_index < 0 || restricted_index >= dim()) {
        throw std::out_of_range("StateSpace: index out of range");
    }
    return states_[restricted_index];
}

int StateSpace::index_of(const BasisState& s) const {
    auto it = index_.find(s.as_array());
    if (it == index_.end()) {
        throw std::invalid_argument("StateSpace: state " + s.to_string() +
                                    " not in space");
    }
    return it->second;
}

bool StateSpace::contains(const BasisState& s) const {
    return index_.count(s.as_array()) != 0;
}

int StateSpace::full_index_of(int restricted_index) const {
    return full_index(state(restricted_index));
}

int full_index(const BasisState& s) {
    if (s.p1 > 1 || s.p2 > 1 || s.m > 1) {
        throw std::domain_error("full_index: occupation above 1 in " +
                                s.to_string() +
                                " is not embeddable in a qubit register");
    }
    if (!s.valid(1)) {
        throw std::domain_error("full_index: invalid state " + s.to_string());
    }
    return 64 * s.p1 + 32 * s.p2 + 16 * s.m + 8 * s.l1 + 4 * s.l2 + 2 * s.L +
           s.k;
}

BasisState unpack_full_index(int index) {
    if (index < 0 || index >= 128) {
        throw std::out_of_range("unpack_full_index: index out of [0,128)");
    }
    BasisState s;
    s.p1 = (index >> 6) & 1;
    s.p2 = (index >> 5) & 1;
    s.m = (index >> 4) & 1;
    s.l1 = (index >> 3) & 1;
    s.l2 = (index >> 2) & 1;
    s.L = (index >> 1) & 1;
    s.k = index & 1;
    return s;
}

namespace {

int max_occupation(const BasisState& s) {
    return std::max({s.p1, s.p2, s.m});
}

}  // namespace

StateSpace enumerate_states(const std::vector<BasisState>& initial,
                            const RuleSet& rules, int occupation_cap) {
    if (initial.empty()) {
        throw std::invalid_argument("enumerate_states: empty initial support");
    }
    for (const auto& s : initial) {
        if (!s.valid(occupation_cap)) {
            throw std::invalid_argument("enumerate_states: invalid state " +
                                        s.to_string());
        }
    }

    // Layer 0 is the initial support in lexicographic order; each later
    // layer collects the newly reachable states, again lexicographically.
    std::set<std::array<int, 7>> seen;
    std::vector<BasisState> ordered;
    std::vector<BasisState> layer;
    for (const auto& s : initial) layer.push_back(s);
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());

    while (!layer.empty()) {
        std::vector<BasisState> next;
        for (const auto& s : layer) {
            if (seen.insert(s.as_array()).second) ordered.push_back(s);
        }
        for (const auto& s : layer) {
            auto visit = [&](const BasisState& t) {
                if (max_occupation(t) > occupation_cap) {
                    throw std::runtime_error(
                        "enumerate_states: occupation cap " +
                        std::to_string(occupation_cap) + " exceeded at " +
                        t.to_string() + "; rule set does not terminate");
                }
                if (!seen.count(t.as_array())) next.push_back(t);
            };
            for (const auto& rule : rules) {
                if (rule.guard(s)) visit(rule.apply(s));
                if (rule.reverse_guard(s)) visit(rule.reverse_apply(s));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        layer = std::move(next);
    }
    return StateSpace(std::move(ordered));
}

const std::vector<BasisState>& reference_states() {
    // The 17 reachable configurations, in the reference numbering.
    static const std::vector<BasisState> table = {
        {0, 0, 0, 0, 0, 1, 0},  // 0
        {0, 0, 0, 0, 0, 1, 1},  // 1
        {0, 0, 0, 0, 1, 1, 0},  // 2
        {0, 0, 0, 0, 1, 1, 1},  // 3
        {0, 0, 0, 1, 0, 1, 0},  // 4
        {0, 0, 0, 1, 0, 1, 1},  // 5
        {0, 0, 0, 1, 1, 1, 0},  // 6
        {0, 0, 0, 1, 1, 1, 1},  // 7
        {0, 0, 1, 0, 0, 0, 0},  // 8
        {0, 1, 1, 0, 0, 0, 0},  // 9
        {1, 0, 1, 0, 0, 0, 0},  // 10
        {1, 1, 1, 0, 0, 0, 0},  // 11
        {0, 0, 1, 0, 1, 0, 0},  // 12
        {1, 0, 1, 0, 1, 0, 0},  // 13
        {0, 0, 1, 1, 0, 0, 0},  // 14
        {0, 1, 1, 1, 0, 0, 0},  // 15
        {0, 0, 1, 1, 1, 0, 0},  // 16
    };
    return table;
}

int reference_index_of(const BasisState& s) {
    const auto& table = reference_states();
    for (int i = 0; i < static_cast<int>(table.size()); ++i) {
        if (table[i] == s) return i;
    }
    throw std::invalid_argument("reference_index_of: state " + s.to_string() +
                                " not in the reference set");
}

std::vector<BasisState> initial_support() {
    return {
        {0, 0, 0, 0, 0, 1, 1},
        {0, 0, 0, 1, 0, 1, 1},
        {0, 0, 0, 0, 1, 1, 1},
        {0, 0, 0, 1, 1, 1, 1},
    };
}

}  // namespace cqed
