#pragma once

#include <complex>
#include <vector>

namespace cqed {

using Complex = std::complex<double>;

/** Dense complex matrix, row-major, value semantics. */
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(int i, int j) { return data_[idx(i, j)]; }
    const Complex& operator()(int i, int j) const { return data_[idx(i, j)]; }

    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(Complex scalar) const;
    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scalar);

    ComplexMatrix adjoint() const;

    Complex trace() const;
    double frobenius_norm() const;
    // Largest |H(i,j) - conj(H(j,i))| over all entries.
    double hermiticity_defect() const;
    bool all_finite() const;

    std::vector<Complex> apply(const std::vector<Complex>& v) const;

private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i) * cols_ + j;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> data_;
};

/**
 * Matrix exponential by precise time-step integration: the argument is
 * scaled by 1/2^M, expanded to `taylor_order` Taylor terms with the
 * identity left out, then squared back up through the doubling recursion
 * T_n = 2 T_{n-1} + T_{n-1} T_{n-1}. The identity is added only once, at
 * the end, which keeps the small increments away from O(1) entries until
 * the final step.
 */
ComplexMatrix expm_ptsim(const ComplexMatrix& a, int scaling_levels = 20,
                         int taylor_order = 4);

/**
 * exp(scale * H) for Hermitian H via the Jacobi eigendecomposition,
 * V diag(exp(scale * lambda_i)) V^dagger. Independent of expm_ptsim; used
 * as its cross-check.
 */
ComplexMatrix expm_oracle(const ComplexMatrix& hermitian, Complex scale);

/** Eigenvalues of a Hermitian matrix, ascending. */
std::vector<double> eigvals_hermitian(const ComplexMatrix& hermitian);

struct HermitianEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column i pairs with values[i]
};

/**
 * Full Hermitian eigendecomposition by cyclic Jacobi rotations. The input
 * is symmetrized as (H + H^dagger)/2 after a Hermiticity check; iteration
 * stops when the largest off-diagonal magnitude falls below
 * 1e-13 * ||H||_F, and throws after 100 sweeps without convergence.
 */
HermitianEigen eigh_hermitian(const ComplexMatrix& hermitian);

}  // namespace cqed
