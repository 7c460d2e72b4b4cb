#include "cqed/model.hpp"

#include <cmath>
#include <stdexcept>

namespace cqed {

void ModelParams::validate() const {
    if (!(hbar > 0.0)) {
        throw std::invalid_argument("ModelParams: hbar must be positive");
    }
    if (!(omega_up > 0.0) || !(omega_down > 0.0) || !(omega_ph > 0.0)) {
        throw std::invalid_argument(
            "ModelParams: frequencies must be positive");
    }
    if (g_up < 0.0 || g_down < 0.0 || g_bond < 0.0 || zeta < 0.0) {
        throw std::invalid_argument(
            "ModelParams: couplings must be non-negative");
    }
}

RuleSet interaction_rules() {
    RuleSet rules;

    // R1: up-spin orbital relaxes and emits a photon; needs a formed bond.
    rules.push_back(Rule{
        "g_up",
        [](const BasisState& s) { return s.L == 0 && s.l1 == 1; },
        [](const BasisState& s) {
            BasisState t = s;
            t.l1 = 0;
            t.p1 += 1;
            return t;
        },
        [](const BasisState& s) { return s.L == 0 && s.l1 == 0 && s.p1 >= 1; },
        [](const BasisState& s) {
            BasisState t = s;
            t.l1 = 1;
            t.p1 -= 1;
            return t;
        },
        [](const ModelParams& p, const BasisState& s) {
            return p.g_up * std::sqrt(static_cast<double>(s.p1 + 1));
        },
    });

    // R2: down-spin counterpart.
    rules.push_back(Rule{
        "g_down",
        [](const BasisState& s) { return s.L == 0 && s.l2 == 1; },
        [](const BasisState& s) {
            BasisState t = s;
            t.l2 = 0;
            t.p2 += 1;
            return t;
        },
        [](const BasisState& s) { return s.L == 0 && s.l2 == 0 && s.p2 >= 1; },
        [](const BasisState& s) {
            BasisState t = s;
            t.l2 = 1;
            t.p2 -= 1;
            return t;
        },
        [](const ModelParams& p, const BasisState& s) {
            return p.g_down * std::sqrt(static_cast<double>(s.p2 + 1));
        },
    });

    // R3: bond forms and releases a phonon; nuclei must share a cavity and
    // both photon modes must be empty.
    rules.push_back(Rule{
        "g_bond",
        [](const BasisState& s) {
            return s.L == 1 && s.k == 0 && s.p1 == 0 && s.p2 == 0;
        },
        [](const BasisState& s) {
            BasisState t = s;
            t.L = 0;
            t.m += 1;
            return t;
        },
        [](const BasisState& s) {
            return s.L == 0 && s.k == 0 && s.p1 == 0 && s.p2 == 0 && s.m >= 1;
        },
        [](const BasisState& s) {
            BasisState t = s;
            t.L = 1;
            t.m -= 1;
            return t;
        },
        [](const ModelParams& p, const BasisState& s) {
            return p.g_bond * std::sqrt(static_cast<double>(s.m + 1));
        },
    });

    // R4: nuclei tunnel into one cavity; only while the bond is broken.
    rules.push_back(Rule{
        "zeta",
        [](const BasisState& s) { return s.L == 1 && s.k == 1; },
        [](const BasisState& s) {
            BasisState t = s;
            t.k = 0;
            return t;
        },
        [](const BasisState& s) { return s.L == 1 && s.k == 0; },
        [](const BasisState& s) {
            BasisState t = s;
            t.k = 1;
            return t;
        },
        [](const ModelParams& p, const BasisState&) { return p.zeta; },
    });

    return rules;
}

ComplexMatrix build_hamiltonian(const ModelParams& params,
                                const StateSpace& space) {
    const int n = space.dim();
    const RuleSet rules = interaction_rules();
    ComplexMatrix h(n, n);

    for (int i = 0; i < n; ++i) {
        const BasisState& s = space.state(i);
        const double diag =
            params.hbar * (params.omega_up * (s.p1 + s.l1) +
                           params.omega_down * (s.p2 + s.l2) +
                           params.omega_ph * (s.m + s.L));
        h(i, i) = diag;

        for (const auto& rule : rules) {
            if (!rule.guard(s)) continue;
            const BasisState t = rule.apply(s);
            if (!space.contains(t)) {
                throw std::runtime_error(
                    "build_hamiltonian: rule " + rule.label + " maps " +
                    s.to_string() + " to " + t.to_string() +
                    " outside the state space");
            }
            const int j = space.index_of(t);
            const double amp = rule.amplitude(params, s);
            h(i, j) += amp;
            h(j, i) += amp;
        }
    }
    return h;
}

RwaReport validate_rwa(const ModelParams& params) {
    if (params.hbar == 0.0 || params.omega_up == 0.0 ||
        params.omega_down == 0.0 || params.omega_ph == 0.0) {
        throw std::invalid_argument("validate_rwa: zero frequency");
    }
    RwaReport report;
    report.ratio_photon = std::max(params.g_up, params.g_down) /
                          (params.hbar * std::min(params.omega_up,
                                                  params.omega_down));
    report.ratio_phonon = params.g_bond / (params.hbar * params.omega_ph);
    report.ok = report.ratio_photon < 0.1 && report.ratio_phonon < 0.1;
    return report;
}

const std::vector<std::pair<int, int>>& reference_edges() {
    static const std::vector<std::pair<int, int>> edges = {
        // tunneling                bond <-> phonon          photon emission
        {0, 1}, {2, 3}, {4, 5}, {6, 7},
        {0, 8}, {2, 12}, {4, 14}, {6, 16},
        {10, 14}, {11, 15}, {13, 16},
        {9, 12}, {11, 13}, {15, 16},
    };
    return edges;
}

}  // namespace cqed
