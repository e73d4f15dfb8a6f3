// Copyright 2026 The triqubit Authors
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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "triqubit/labels.h"

namespace triqubit {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDim = 8;

/// Dense square complex matrix of dimension at most 8, stored row-major in a
/// fixed-size buffer so that copies stay on the stack.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    /// Row-major entries; `entries.size()` must be a perfect square <= 64.
    static ComplexMatrix from_row_major(std::span<const Complex> entries);
    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><v| for a column vector v.
    static ComplexMatrix outer(std::span<const Complex> v);

    std::size_t dim() const noexcept { return dim_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * kMaxDim + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * kMaxDim + c]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// max_ij |a_ij - a_ji^*|
    double hermiticity_defect() const;
    std::vector<Complex> row_major() const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);

    bool operator==(const ComplexMatrix &rhs) const;

   private:
    std::size_t dim_ = 0;
    std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Entrywise max-norm of the difference; dimensions must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

struct HermitianEigenResult {
    /// Sorted descending.
    std::vector<double> values;
    /// Column k is the eigenvector for values[k].
    ComplexMatrix vectors;
};

/// Cyclic Jacobi diagonalization. Throws NonSquare/NotHermitian/NoConvergence.
HermitianEigenResult hermitian_eigen(const ComplexMatrix &m, bool symmetrize = false);

/// Eigenvalues only, same ordering and algorithm as hermitian_eigen.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, bool symmetrize = false);

/// Transpose of one qubit's indices of an 8x8 three-qubit operator.
ComplexMatrix partial_transpose(const ComplexMatrix &rho, Qubit sub);

/// Reduced operator on the kept qubits (listed in ascending A<B<C order in the
/// result). `keep` must hold one or two distinct qubits.
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const Qubit> keep);
ComplexMatrix partial_trace(const ComplexMatrix &rho, Qubit keep);
ComplexMatrix partial_trace(const ComplexMatrix &rho, Pair keep);

/// Tr(M^2) of a unit-trace Hermitian matrix, clamped into [0, 1].
double purity(const ComplexMatrix &m);

/// Pauli matrix by index: 0 = I, 1 = X, 2 = Y, 3 = Z.
const ComplexMatrix &pauli(int index);

/// Real part of Tr(M P), computed without forming the product.
double trace_product_real(const ComplexMatrix &m, const ComplexMatrix &p);

}  // namespace triqubit
