#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cqed/entropy.hpp"
#include "cqed/evolve.hpp"
#include "cqed/model.hpp"
#include "support/oracles.hpp"

using namespace cqed;

namespace {

StateSpace model_space() {
    return enumerate_states(initial_support(), interaction_rules());
}

// evolved mid-trajectory state at defaults, entangled across every cut
StateVector evolved_state() {
    const StateSpace space = model_space();
    const Trajectory traj = run(ModelParams{}, space, 1e-9, 2000, 2000);
    return traj.samples.back();
}

std::vector<Complex> three_qubit_ladder() {
    // amplitudes 1..8 before normalization; reductions have closed forms
    std::vector<Complex> psi(8);
    double norm_sq = 0.0;
    for (int i = 0; i < 8; ++i) {
        psi[i] = static_cast<double>(i + 1);
        norm_sq += std::norm(psi[i]);
    }
    for (auto& a : psi) a *= 1.0 / std::sqrt(norm_sq);
    return psi;
}

}  // namespace

TEST_CASE("left-end reduction of a three-qubit state") {
    // rho_0 entries are row/column sums over the trailing two qubits
    const auto psi = three_qubit_ladder();
    const ComplexMatrix rho = reduced_density_full(psi, 3, {0});
    CHECK(rho(0, 0).real() == doctest::Approx(30.0 / 204.0));
    CHECK(rho(0, 1).real() == doctest::Approx(70.0 / 204.0));
    CHECK(rho(1, 0).real() == doctest::Approx(70.0 / 204.0));
    CHECK(rho(1, 1).real() == doctest::Approx(174.0 / 204.0));
}

TEST_CASE("right-end reduction of a three-qubit state") {
    const auto psi = three_qubit_ladder();
    const ComplexMatrix rho = reduced_density_full(psi, 3, {2});
    CHECK(rho(0, 0).real() == doctest::Approx(84.0 / 204.0));
    CHECK(rho(0, 1).real() == doctest::Approx(100.0 / 204.0));
    CHECK(rho(1, 1).real() == doctest::Approx(120.0 / 204.0));
}

TEST_CASE("intermediate reduction of a three-qubit state") {
    const auto psi = three_qubit_ladder();
    const ComplexMatrix rho = reduced_density_full(psi, 3, {1});
    CHECK(rho(0, 0).real() == doctest::Approx(66.0 / 204.0));
    CHECK(rho(0, 1).real() == doctest::Approx(94.0 / 204.0));
    CHECK(rho(1, 1).real() == doctest::Approx(138.0 / 204.0));
}

TEST_CASE("two-qubit left block of a three-qubit state") {
    const auto psi = three_qubit_ladder();
    const ComplexMatrix rho = reduced_density_full(psi, 3, {0, 1});
    CHECK(rho(0, 0).real() == doctest::Approx(5.0 / 204.0));
    CHECK(rho(0, 1).real() == doctest::Approx(11.0 / 204.0));
    CHECK(rho(0, 3).real() == doctest::Approx(23.0 / 204.0));
    CHECK(rho(2, 2).real() == doctest::Approx(61.0 / 204.0));
    CHECK(rho.trace().real() == doctest::Approx(1.0));
}

TEST_CASE("complex amplitudes keep the reduction hermitian") {
    auto psi = three_qubit_ladder();
    for (int i = 0; i < 8; ++i) {
        psi[i] *= std::exp(Complex(0.0, 0.37 * i));
    }
    for (const auto& keep :
         {std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{0, 2}}) {
        const ComplexMatrix rho = reduced_density_full(psi, 3, keep);
        CHECK(rho.hermiticity_defect() <= 1e-15);
        CHECK(std::abs(rho.trace() - Complex(1.0, 0.0)) <= 1e-14);
        const ComplexMatrix oracle =
            testing::brute_force_reduction(psi, 3, keep);
        CHECK((rho - oracle).frobenius_norm() <= 1e-14);
    }
}

TEST_CASE("random seven-qubit reductions match the brute-force oracle") {
    std::mt19937 rng(20250101);
    std::uniform_int_distribution<int> keep_count(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
        const auto psi = testing::random_state(rng, 128);
        std::vector<int> all = {0, 1, 2, 3, 4, 5, 6};
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> keep(all.begin(), all.begin() + keep_count(rng));

        const ComplexMatrix fast = reduced_density_full(psi, 7, keep);
        const ComplexMatrix oracle =
            testing::brute_force_reduction(psi, 7, keep);
        double worst = 0.0;
        for (int i = 0; i < fast.rows(); ++i) {
            for (int j = 0; j < fast.cols(); ++j) {
                worst = std::max(worst, std::abs(fast(i, j) - oracle(i, j)));
            }
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("restricted-space reduction agrees with the embedded full vector") {
    const StateSpace space = model_space();
    std::mt19937 rng(77);
    const auto raw = testing::random_state(rng, space.dim());
    StateVector psi;
    psi.amplitudes = raw;

    std::vector<Complex> full(128, Complex{});
    for (int i = 0; i < space.dim(); ++i) {
        full[space.full_index_of(i)] = psi.amplitudes[i];
    }
    for (const auto& part : preset_partitions()) {
        const ComplexMatrix a = reduced_density(psi, space, part);
        const ComplexMatrix b =
            testing::brute_force_reduction(full, 7, part.keep);
        CHECK((a - b).frobenius_norm() <= 1e-13);
    }
}

TEST_CASE("computational basis states are separable across every cut") {
    const StateSpace space = model_space();
    StateVector psi;
    psi.amplitudes.assign(space.dim(), Complex{});
    psi.amplitudes[0] = 1.0;
    for (const auto& part : preset_partitions()) {
        const double s = von_neumann_entropy(reduced_density(psi, space, part));
        CHECK(s <= 1e-12);
    }
}

TEST_CASE("entropy of canonical spectra") {
    ComplexMatrix pure(2, 2);
    pure(0, 0) = 1.0;
    CHECK(von_neumann_entropy(pure) == 0.0);

    ComplexMatrix mixed(2, 2);
    mixed(0, 0) = mixed(1, 1) = 0.5;
    CHECK(von_neumann_entropy(mixed) == doctest::Approx(1.0));

    const int n = 8;
    ComplexMatrix flat(n, n);
    for (int i = 0; i < n; ++i) flat(i, i) = 1.0 / n;
    CHECK(von_neumann_entropy(flat) == doctest::Approx(3.0));
}

TEST_CASE("entropy rejects spectra that are not density-like") {
    ComplexMatrix bad(2, 2);
    bad(0, 0) = 1.1;
    bad(1, 1) = -0.1;
    CHECK_THROWS_AS(von_neumann_entropy(bad), std::domain_error);
}

TEST_CASE("tiny negative rounding is clamped to zero") {
    ComplexMatrix rho(2, 2);
    rho(0, 0) = 1.0;
    rho(1, 1) = -1e-11;
    CHECK(von_neumann_entropy(rho) == 0.0);
}

TEST_CASE("preset partitions cover the five standard subsystems") {
    const auto& presets = preset_partitions();
    REQUIRE(presets.size() == 5);
    CHECK(presets[0].name == "S_Omega");
    CHECK(presets[0].keep == std::vector<int>{0, 1});
    CHECK(presets[1].name == "S_Omega_up");
    CHECK(presets[1].keep == std::vector<int>{0});
    CHECK(presets[2].name == "S_Omega_down");
    CHECK(presets[2].keep == std::vector<int>{1});
    CHECK(presets[3].name == "S_omega");
    CHECK(presets[3].keep == std::vector<int>{2});
    CHECK(presets[4].name == "S_Omega_omega");
    CHECK(presets[4].keep == std::vector<int>{0, 1, 2});
    for (const auto& p : presets) {
        CHECK(!p.keep.empty());
        CHECK(p.keep.size() < 7);
    }
}

TEST_CASE("keep-set validation") {
    const StateSpace space = model_space();
    const StateVector psi = initial_state(space);
    CHECK_THROWS_AS(reduced_density(psi, space, Bipartition{{}, ""}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        reduced_density(psi, space, Bipartition{{0, 1, 2, 3, 4, 5, 6}, ""}),
        std::invalid_argument);
    CHECK_THROWS_AS(reduced_density(psi, space, Bipartition{{7}, ""}),
                    std::invalid_argument);
    CHECK_THROWS_AS(reduced_density(psi, space, Bipartition{{1, 1}, ""}),
                    std::invalid_argument);
}

TEST_CASE("complementary cuts carry the same entropy on evolved states") {
    const StateSpace space = model_space();
    const StateVector psi = evolved_state();
    for (const auto& part : preset_partitions()) {
        std::vector<int> complement;
        for (int q = 0; q < 7; ++q) {
            if (std::find(part.keep.begin(), part.keep.end(), q) ==
                part.keep.end()) {
                complement.push_back(q);
            }
        }
        const double s_keep =
            von_neumann_entropy(reduced_density(psi, space, part));
        const double s_comp = von_neumann_entropy(
            reduced_density(psi, space, Bipartition{complement, "comp"}));
        CHECK(std::abs(s_keep - s_comp) <= 1e-9);
    }
}

TEST_CASE("entropies do not depend on the restricted ordering") {
    const StateSpace space = model_space();
    const StateVector psi = evolved_state();

    // rebuild the space with a rotated state list and permute amplitudes
    std::vector<BasisState> rotated(space.states().begin() + 5,
                                    space.states().end());
    rotated.insert(rotated.end(), space.states().begin(),
                   space.states().begin() + 5);
    const StateSpace shuffled(rotated);
    StateVector permuted;
    permuted.amplitudes.assign(space.dim(), Complex{});
    for (int i = 0; i < space.dim(); ++i) {
        permuted.amplitudes[shuffled.index_of(space.state(i))] =
            psi.amplitudes[i];
    }
    for (const auto& part : preset_partitions()) {
        const double a = von_neumann_entropy(reduced_density(psi, space, part));
        const double b =
            von_neumann_entropy(reduced_density(permuted, shuffled, part));
        CHECK(std::abs(a - b) <= 1e-12);
    }
}
