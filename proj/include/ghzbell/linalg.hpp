// Copyright 2026 The ghzbell Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex matrices of the tiny fixed sizes this project needs (2x2
 * observables, 4x4 two-party operators), plus Hermitian eigenvalues.
 *
 * Eigenvalues are computed without an external solver: a Hermitian N x N
 * matrix R + iS embeds into the real symmetric 2N x 2N matrix
 * [[R, -S], [S, R]], whose spectrum is that of the original with every
 * eigenvalue doubled; cyclic Jacobi rotations diagonalize the embedding.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ghzbell/statevector.hpp"

namespace ghzbell {

/// Row-major dense complex matrix.
class ComplexMatrix {
  public:
    /// Zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols,
                  std::vector<complex_t> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    complex_t &at(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const complex_t &at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    ComplexMatrix adjoint() const;
    bool is_hermitian(double tol = 1e-12) const;

    friend ComplexMatrix operator+(const ComplexMatrix &a,
                                   const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a,
                                   const ComplexMatrix &b);
    friend ComplexMatrix operator*(const ComplexMatrix &a,
                                   const ComplexMatrix &b);
    friend ComplexMatrix operator*(complex_t scalar, const ComplexMatrix &m);

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<complex_t> entries_;
};

/// Matrix-vector product.
std::vector<complex_t> apply(const ComplexMatrix &m,
                             std::span<const complex_t> v);

/// Kronecker product, left factor major.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// [A, B] = AB - BA.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

/**
 * Eigenvalues of a Hermitian matrix, ascending.
 *
 * @throws std::invalid_argument if the matrix is not square or not Hermitian
 *         within 1e-9
 */
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

/// Largest absolute eigenvalue of a Hermitian matrix.
double spectral_norm_hermitian(const ComplexMatrix &m);

namespace detail {

/**
 * Cyclic Jacobi eigenvalues of a real symmetric matrix given row-major in
 * `a` (size n*n), ascending. Exposed for direct testing.
 */
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double> a,
                                                 std::size_t n);

} // namespace detail

} // namespace ghzbell
