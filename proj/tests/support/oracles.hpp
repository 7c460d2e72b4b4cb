// Test-only reference implementations, kept independent of the library
// code paths they validate.

#pragma once

#include <complex>
#include <random>
#include <vector>

#include "cqed/basis.hpp"
#include "cqed/model.hpp"
#include "cqed/numerics.hpp"

namespace cqed::testing {

// Brute-force partial trace: materialize rho = |psi><psi| over the full
// register and sum every matching index pair. Quadratic in the register
// size, used only as an oracle.
inline ComplexMatrix brute_force_reduction(const std::vector<Complex>& psi,
                                           int n_qubits,
                                           const std::vector<int>& keep) {
    const int full_dim = 1 << n_qubits;
    const int n_keep = static_cast<int>(keep.size());
    const int dim = 1 << n_keep;

    std::vector<bool> kept(n_qubits, false);
    for (int q : keep) kept[q] = true;

    auto bit_of = [n_qubits](int index, int q) {
        return (index >> (n_qubits - 1 - q)) & 1;
    };
    auto kept_config = [&](int index) {
        int c = 0;
        for (int b = 0; b < n_keep; ++b) {
            c = (c << 1) | bit_of(index, keep[b]);
        }
        return c;
    };

    ComplexMatrix rho(dim, dim);
    for (int r = 0; r < full_dim; ++r) {
        for (int c = 0; c < full_dim; ++c) {
            bool env_match = true;
            for (int q = 0; q < n_qubits && env_match; ++q) {
                if (!kept[q] && bit_of(r, q) != bit_of(c, q)) {
                    env_match = false;
                }
            }
            if (!env_match) continue;
            rho(kept_config(r), kept_config(c)) +=
                psi[r] * std::conj(psi[c]);
        }
    }
    return rho;
}

// Kronecker product of 2x2 single-qubit operators over the 7-mode register.
inline ComplexMatrix kron7(const std::vector<ComplexMatrix>& factors) {
    ComplexMatrix out(1, 1);
    out(0, 0) = 1.0;
    for (const auto& f : factors) {
        ComplexMatrix next(out.rows() * f.rows(), out.cols() * f.cols());
        for (int i = 0; i < out.rows(); ++i) {
            for (int j = 0; j < out.cols(); ++j) {
                for (int a = 0; a < f.rows(); ++a) {
                    for (int b = 0; b < f.cols(); ++b) {
                        next(i * f.rows() + a, j * f.cols() + b) =
                            out(i, j) * f(a, b);
                    }
                }
            }
        }
        out = std::move(next);
    }
    return out;
}

inline ComplexMatrix qubit_op(Complex e00, Complex e01, Complex e10,
                              Complex e11) {
    ComplexMatrix m(2, 2);
    m(0, 0) = e00;
    m(0, 1) = e01;
    m(1, 0) = e10;
    m(1, 1) = e11;
    return m;
}

// Full 128-dim Hamiltonian assembled term by term from the explicit
// single-mode matrices: lowering |1> -> |0>, raising |0> -> |1>, and the
// projectors selecting bond and cavity configurations.
inline ComplexMatrix full_register_hamiltonian(const ModelParams& p) {
    const ComplexMatrix id = qubit_op(1, 0, 0, 1);
    const ComplexMatrix lower = qubit_op(0, 1, 0, 0);   // a and sigma alike
    const ComplexMatrix raise = qubit_op(0, 0, 1, 0);
    const ComplexMatrix number = qubit_op(0, 0, 0, 1);  // counts |1>
    const ComplexMatrix proj0 = qubit_op(1, 0, 0, 0);
    const ComplexMatrix proj1 = number;

    auto term = [&](int slot, const ComplexMatrix& op) {
        std::vector<ComplexMatrix> f(7, id);
        f[slot] = op;
        return kron7(f);
    };

    // Diagonal number operators: photon/phonon counts plus the excited
    // orbital flags and the broken-bond flag.
    ComplexMatrix h = term(0, number) * Complex(p.hbar * p.omega_up, 0);
    h += term(1, number) * Complex(p.hbar * p.omega_down, 0);
    h += term(2, number) * Complex(p.hbar * p.omega_ph, 0);
    h += term(3, number) * Complex(p.hbar * p.omega_up, 0);
    h += term(4, number) * Complex(p.hbar * p.omega_down, 0);
    h += term(5, number) * Complex(p.hbar * p.omega_ph, 0);

    auto multi = [&](std::vector<std::pair<int, const ComplexMatrix*>> ops) {
        std::vector<ComplexMatrix> f(7, id);
        for (const auto& [slot, op] : ops) f[slot] = *op;
        return kron7(f);
    };

    // Photon exchange, active only while the bond is formed (L = 0).
    ComplexMatrix up = multi({{0, &raise}, {3, &lower}, {5, &proj0}});
    h += (up + up.adjoint()) * Complex(p.g_up, 0);
    ComplexMatrix down = multi({{1, &raise}, {4, &lower}, {5, &proj0}});
    h += (down + down.adjoint()) * Complex(p.g_down, 0);

    // Bond formation emitting a phonon, gated on shared cavity and empty
    // photon modes.
    ComplexMatrix bond =
        multi({{0, &proj0}, {1, &proj0}, {2, &raise}, {5, &lower}, {6, &proj0}});
    h += (bond + bond.adjoint()) * Complex(p.g_bond, 0);

    // Tunneling, active only while the bond is broken (L = 1).
    ComplexMatrix tunnel = multi({{5, &proj1}, {6, &lower}});
    h += (tunnel + tunnel.adjoint()) * Complex(p.zeta, 0);

    return h;
}

inline std::vector<Complex> random_state(std::mt19937& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> psi(dim);
    double norm_sq = 0.0;
    for (auto& a : psi) {
        a = Complex(gauss(rng), gauss(rng));
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : psi) a *= inv;
    return psi;
}

inline ComplexMatrix random_hermitian(std::mt19937& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix h(dim, dim);
    for (int i = 0; i < dim; ++i) {
        h(i, i) = gauss(rng);
        for (int j = i + 1; j < dim; ++j) {
            const Complex v(gauss(rng), gauss(rng));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

inline ComplexMatrix random_skew_hermitian(std::mt19937& rng, int dim) {
    return random_hermitian(rng, dim) * Complex(0.0, 1.0);
}

}  // namespace cqed::testing
