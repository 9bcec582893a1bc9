// Copyright 2026 The quatsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUATSIM_MATRIX_HPP
#define QUATSIM_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "quatsim/constants.hpp"
#include "quatsim/errors.hpp"
#include "quatsim/scalar.hpp"

namespace quatsim {

/// Dense row-major matrix over a division-ring scalar.
///
/// Operators act on column vectors from the left and scalar coefficients
/// multiply vectors from the right, so all the free functions below keep
/// operand order exactly as written even for non-commutative entries.
template <typename T>
class Matrix {
   public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, ScalarTraits<T>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; i++) {
            m(i, i) = ScalarTraits<T>::one();
        }
        return m;
    }

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }

    T &operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const T &operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    const std::vector<T> &entries() const {
        return entries_;
    }
    std::vector<T> &entries() {
        return entries_;
    }

    bool operator==(const Matrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

template <typename T>
Matrix<T> operator+(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("matrix addition: shape mismatch");
    }
    Matrix<T> out = a;
    for (std::size_t i = 0; i < out.entries().size(); i++) {
        out.entries()[i] += b.entries()[i];
    }
    return out;
}

template <typename T>
Matrix<T> operator-(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("matrix subtraction: shape mismatch");
    }
    Matrix<T> out = a;
    for (std::size_t i = 0; i < out.entries().size(); i++) {
        out.entries()[i] -= b.entries()[i];
    }
    return out;
}

/// Product with (AB)_ik = sum_j A_ij * B_jk, the A entry strictly on the
/// left. Over quaternions swapping the operands inside the sum changes the
/// result, so this order is load-bearing.
template <typename T>
Matrix<T> matmul(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions differ");
    }
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            const T &aij = a(i, j);
            for (std::size_t k = 0; k < b.cols(); k++) {
                out(i, k) += aij * b(j, k);
            }
        }
    }
    return out;
}

/// Conjugate transpose.
template <typename T>
Matrix<T> adjoint(const Matrix<T> &m) {
    Matrix<T> out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); i++) {
        for (std::size_t j = 0; j < m.cols(); j++) {
            out(j, i) = ScalarTraits<T>::conjugate(m(i, j));
        }
    }
    return out;
}

/// Kronecker product with the A entry on the left of each product. The
/// mixed-product identity (A kron B)(C kron D) = (AC) kron (BD) holds over
/// commutative scalars only; callers over quaternions must not assume it.
template <typename T>
Matrix<T> kron(const Matrix<T> &a, const Matrix<T> &b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            const T &aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); k++) {
                for (std::size_t l = 0; l < b.cols(); l++) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

template <typename T>
T trace(const Matrix<T> &m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("trace: matrix not square");
    }
    T acc = ScalarTraits<T>::zero();
    for (std::size_t i = 0; i < m.rows(); i++) {
        acc += m(i, i);
    }
    return acc;
}

/// Traces out the most-significant wire of a square matrix on a power-of-two
/// dimension >= 4: in 2x2 block form [[A, B], [C, D]] the result is A + D.
template <typename T>
Matrix<T> partial_trace_first(const Matrix<T> &rho) {
    std::size_t n = rho.rows();
    if (n != rho.cols() || n < 4 || (n & (n - 1)) != 0) {
        throw DimensionError("partial_trace_first: need a square power-of-two dimension >= 4");
    }
    std::size_t h = n / 2;
    Matrix<T> out(h, h);
    for (std::size_t i = 0; i < h; i++) {
        for (std::size_t j = 0; j < h; j++) {
            out(i, j) = rho(i, j) + rho(i + h, j + h);
        }
    }
    return out;
}

template <typename T>
double max_abs(const Matrix<T> &m) {
    double best = 0.0;
    for (const T &x : m.entries()) {
        best = std::max(best, ScalarTraits<T>::abs_sq(x));
    }
    return std::sqrt(best);
}

template <typename T>
double max_abs_diff(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shape mismatch");
    }
    double best = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); i++) {
        T d = a.entries()[i];
        d -= b.entries()[i];
        best = std::max(best, ScalarTraits<T>::abs_sq(d));
    }
    return std::sqrt(best);
}

/// Membership in the compact group of the domain (orthogonal, unitary or
/// symplectic): adjoint(M) * M must be the identity to within tolerance.
template <typename T>
bool is_group_member(const Matrix<T> &m, double tolerance) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        return false;
    }
    Matrix<T> gram = matmul(adjoint(m), m);
    return max_abs_diff(gram, Matrix<T>::identity(m.rows())) <= tolerance;
}

template <typename To, typename From>
Matrix<To> matrix_widen(const Matrix<From> &m) {
    Matrix<To> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.entries().size(); i++) {
        out.entries()[i] = scalar_widen<To>(m.entries()[i]);
    }
    return out;
}

/// Drops the imaginary parts. Callers must have checked realness already;
/// the real components are passed through bit-exactly.
template <typename From>
Matrix<double> matrix_real_part(const Matrix<From> &m) {
    Matrix<double> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.entries().size(); i++) {
        out.entries()[i] = real_part(m.entries()[i]);
    }
    return out;
}

template <typename T>
double nonreal_magnitude(const Matrix<T> &m) {
    double best = 0.0;
    for (const T &x : m.entries()) {
        best = std::max(best, nonreal_magnitude(x));
    }
    return best;
}

/// Column state vector with amplitudes indexed by basis index. For an
/// n-wire register the index of wire w (1-based, wire 1 most significant)
/// is bit n - w of the basis index.
template <typename T>
struct StateVector {
    std::vector<T> amps;

    StateVector() = default;
    explicit StateVector(std::size_t dim) : amps(dim, ScalarTraits<T>::zero()) {}

    static StateVector basis(int wires, std::size_t index) {
        StateVector v(std::size_t{1} << wires);
        v.amps[index] = ScalarTraits<T>::one();
        return v;
    }

    std::size_t dim() const {
        return amps.size();
    }

    int wires() const {
        std::size_t d = amps.size();
        int n = 0;
        while ((std::size_t{1} << n) < d) {
            n++;
        }
        if ((std::size_t{1} << n) != d) {
            throw DimensionError("state dimension is not a power of two");
        }
        return n;
    }

    double norm_sq() const {
        double acc = 0.0;
        for (const T &a : amps) {
            acc += ScalarTraits<T>::abs_sq(a);
        }
        return acc;
    }

    double norm() const {
        return std::sqrt(norm_sq());
    }

    bool operator==(const StateVector &other) const = default;
};

template <typename T>
double max_abs_diff(const StateVector<T> &a, const StateVector<T> &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("max_abs_diff: state dimensions differ");
    }
    double best = 0.0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        T d = a.amps[i];
        d -= b.amps[i];
        best = std::max(best, ScalarTraits<T>::abs_sq(d));
    }
    return std::sqrt(best);
}

template <typename T>
void require_unit_norm(const StateVector<T> &v, const char *what, double tolerance = tol::kStateNorm) {
    if (std::fabs(v.norm() - 1.0) > tolerance) {
        throw DimensionError(std::string(what) + ": state is not unit norm");
    }
}

template <typename To, typename From>
StateVector<To> state_widen(const StateVector<From> &v) {
    StateVector<To> out(v.dim());
    for (std::size_t i = 0; i < v.dim(); i++) {
        out.amps[i] = scalar_widen<To>(v.amps[i]);
    }
    return out;
}

/// Matrix-vector product, matrix entries applied from the left.
template <typename T>
StateVector<T> apply(const Matrix<T> &m, const StateVector<T> &v) {
    if (m.cols() != v.dim()) {
        throw DimensionError("apply: dimension mismatch");
    }
    StateVector<T> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); i++) {
        T acc = ScalarTraits<T>::zero();
        for (std::size_t j = 0; j < m.cols(); j++) {
            acc += m(i, j) * v.amps[j];
        }
        out.amps[i] = acc;
    }
    return out;
}

}  // namespace quatsim

#endif
