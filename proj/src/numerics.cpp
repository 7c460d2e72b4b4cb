#include "cqed/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cqed {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("ComplexMatrix: shape mismatch");
    }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    require_same_shape(*this, rhs);
    ComplexMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = data_[i] + rhs.data_[i];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    require_same_shape(*this, rhs);
    ComplexMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = data_[i] - rhs.data_[i];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("ComplexMatrix: inner dimension mismatch");
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
    ComplexMatrix out = *this;
    out *= scalar;
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& v : data_) v *= scalar;
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& v : data_) sum += std::norm(v);
    return std::sqrt(sum);
}

double ComplexMatrix::hermiticity_defect() const {
    if (!square()) {
        throw std::invalid_argument("hermiticity_defect: non-square matrix");
    }
    double defect = 0.0;
    for (int i = 0; i < rows_; ++i) {
        for (int j = i; j < cols_; ++j) {
            defect = std::max(defect,
                              std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return defect;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& v : data_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& v) const {
    if (static_cast<int>(v.size()) != cols_) {
        throw std::invalid_argument("ComplexMatrix::apply: size mismatch");
    }
    std::vector<Complex> out(rows_);
    for (int i = 0; i < rows_; ++i) {
        Complex acc = 0.0;
        for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

ComplexMatrix expm_ptsim(const ComplexMatrix& a, int scaling_levels,
                         int taylor_order) {
    if (!a.square()) {
        throw std::invalid_argument("expm_ptsim: non-square matrix");
    }
    if (scaling_levels < 0 || taylor_order < 1) {
        throw std::invalid_argument("expm_ptsim: bad scaling/order");
    }
    const int n = a.rows();
    const double eps = std::ldexp(1.0, -scaling_levels);
    const ComplexMatrix scaled = a * Complex(eps, 0.0);

    // Identity-free Taylor kernel: sum of (A*eps)^j / j!, j = 1..order.
    ComplexMatrix term = scaled;
    ComplexMatrix t = scaled;
    for (int j = 2; j <= taylor_order; ++j) {
        term = term * scaled;
        term *= Complex(1.0 / j, 0.0);
        t += term;
    }

    // Doubling recursion T_n = 2 T_{n-1} + T_{n-1}^2.
    for (int level = 0; level < scaling_levels; ++level) {
        ComplexMatrix sq = t * t;
        t *= Complex(2.0, 0.0);
        t += sq;
    }
    return ComplexMatrix::identity(n) + t;
}

namespace {

constexpr double kHermitianInputTol = 1e-12;
constexpr double kJacobiOffdiagTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

double max_offdiag(const ComplexMatrix& h) {
    double m = 0.0;
    for (int i = 0; i < h.rows(); ++i) {
        for (int j = i + 1; j < h.cols(); ++j) {
            m = std::max(m, std::abs(h(i, j)));
        }
    }
    return m;
}

void require_hermitian(const ComplexMatrix& h, const char* who) {
    if (!h.square()) {
        throw std::invalid_argument(std::string(who) + ": non-square matrix");
    }
    const double scale = std::max(1.0, h.frobenius_norm());
    if (h.hermiticity_defect() > kHermitianInputTol * scale) {
        throw std::invalid_argument(std::string(who) +
                                    ": input is not Hermitian within tolerance");
    }
}

}  // namespace

HermitianEigen eigh_hermitian(const ComplexMatrix& hermitian) {
    require_hermitian(hermitian, "eigh_hermitian");
    const int n = hermitian.rows();

    ComplexMatrix h = (hermitian + hermitian.adjoint()) * Complex(0.5, 0.0);
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double norm = h.frobenius_norm();
    const double stop = kJacobiOffdiagTol * norm;

    if (norm > 0.0) {
        bool converged = max_offdiag(h) <= stop;
        for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const Complex hpq = h(p, q);
                    const double apq = std::abs(hpq);
                    if (apq <= stop) continue;

                    // Unitary 2x2 rotation zeroing the (p,q) pair; the
                    // phase of s tracks the phase of H(p,q).
                    const double app = h(p, p).real();
                    const double aqq = h(q, q).real();
                    const Complex phase = hpq / apq;
                    const double tau = (aqq - app) / (2.0 * apq);
                    const double tsign = tau >= 0.0 ? 1.0 : -1.0;
                    const double tt =
                        tsign / (std::abs(tau) + std::hypot(1.0, tau));
                    const double c = 1.0 / std::sqrt(1.0 + tt * tt);
                    const Complex s = phase * (tt * c);

                    // Column update (right-multiply by J).
                    for (int i = 0; i < n; ++i) {
                        const Complex hip = h(i, p);
                        const Complex hiq = h(i, q);
                        h(i, p) = c * hip - std::conj(s) * hiq;
                        h(i, q) = s * hip + c * hiq;
                    }
                    // Row update (left-multiply by J^dagger).
                    for (int j = 0; j < n; ++j) {
                        const Complex hpj = h(p, j);
                        const Complex hqj = h(q, j);
                        h(p, j) = c * hpj - s * hqj;
                        h(q, j) = std::conj(s) * hpj + c * hqj;
                    }
                    h(p, q) = 0.0;
                    h(q, p) = 0.0;
                    h(p, p) = Complex(h(p, p).real(), 0.0);
                    h(q, q) = Complex(h(q, q).real(), 0.0);

                    for (int i = 0; i < n; ++i) {
                        const Complex vip = v(i, p);
                        const Complex viq = v(i, q);
                        v(i, p) = c * vip - std::conj(s) * viq;
                        v(i, q) = s * vip + c * viq;
                    }
                }
            }
            converged = max_offdiag(h) <= stop;
        }
        if (!converged) {
            throw std::runtime_error(
                "eigh_hermitian: no convergence within sweep cap");
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return h(a, a).real() < h(b, b).real(); });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (int col = 0; col < n; ++col) {
        out.values[col] = h(order[col], order[col]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, col) = v(i, order[col]);
    }
    return out;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& hermitian) {
    return eigh_hermitian(hermitian).values;
}

ComplexMatrix expm_oracle(const ComplexMatrix& hermitian, Complex scale) {
    require_hermitian(hermitian, "expm_oracle");
    const HermitianEigen eig = eigh_hermitian(hermitian);
    const int n = hermitian.rows();
    ComplexMatrix out(n, n);
    for (int col = 0; col < n; ++col) {
        const Complex e = std::exp(scale * eig.values[col]);
        for (int i = 0; i < n; ++i) {
            const Complex vi = eig.vectors(i, col) * e;
            for (int j = 0; j < n; ++j) {
                out(i, j) += vi * std::conj(eig.vectors(j, col));
            }
        }
    }
    return out;
}

}  // namespace cqed
