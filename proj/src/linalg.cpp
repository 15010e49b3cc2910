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

#include "ghzbell/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ghzbell {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shapes do not match");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, complex_t{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<complex_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("entry count does not match dimensions");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = complex_t{1.0, 0.0};
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b);
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        out.entries_[i] = a.entries_[i] + b.entries_[i];
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b);
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        out.entries_[i] = a.entries_[i] - b.entries_[i];
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("inner matrix dimensions do not match");
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const complex_t ark = a.at(r, k);
            for (std::size_t c = 0; c < b.cols_; ++c) {
                out.at(r, c) += ark * b.at(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(complex_t scalar, const ComplexMatrix &m) {
    ComplexMatrix out(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.entries_.size(); ++i) {
        out.entries_[i] = scalar * m.entries_[i];
    }
    return out;
}

std::vector<complex_t> apply(const ComplexMatrix &m,
                             std::span<const complex_t> v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("vector length does not match matrix");
    }
    std::vector<complex_t> out(m.rows(), complex_t{0.0, 0.0});
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[r] += m.at(r, c) * v[c];
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const complex_t scale = a.at(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out.at(ar * b.rows() + br, ac * b.cols() + bc) =
                        scale * b.at(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a * b - b * a;
}

namespace detail {

std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double> a,
                                                 std::size_t n) {
    if (a.size() != n * n) {
        throw std::invalid_argument("matrix buffer size must be n*n");
    }
    auto el = [&a, n](std::size_t r, std::size_t c) -> double & {
        return a[r * n + c];
    };

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        scale = std::max(scale, std::abs(el(i, i)));
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
            scale = std::max(scale, std::abs(el(r, c)));
        }
    }
    if (scale == 0.0) {
        return std::vector<double>(n, 0.0);
    }
    const double stop = 1e-15 * scale;

    constexpr int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r + 1; c < n; ++c) {
                off = std::max(off, std::abs(el(r, c)));
            }
        }
        if (off <= stop) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = el(p, q);
                if (std::abs(apq) <= stop) {
                    continue;
                }
                const double tau = (el(q, q) - el(p, p)) / (2.0 * apq);
                // Smaller-magnitude root of t^2 + 2*tau*t - 1 = 0; keeps the
                // rotation angle at most pi/4, the numerically stable choice.
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t r = 0; r < n; ++r) {
                    const double arp = el(r, p);
                    const double arq = el(r, q);
                    el(r, p) = c * arp - s * arq;
                    el(r, q) = s * arp + c * arq;
                }
                for (std::size_t col = 0; col < n; ++col) {
                    const double apc = el(p, col);
                    const double aqc = el(q, col);
                    el(p, col) = c * apc - s * aqc;
                    el(q, col) = s * apc + c * aqc;
                }
            }
        }
    }

    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) {
        eigenvalues[i] = el(i, i);
    }
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

} // namespace detail

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("eigenvalues require a square matrix");
    }
    if (!m.is_hermitian(1e-9)) {
        throw std::invalid_argument("matrix is not Hermitian");
    }
    const std::size_t n = m.rows();
    // Embed R + iS as [[R, -S], [S, R]]; the embedding is symmetric and
    // carries each eigenvalue of the original twice.
    std::vector<double> embedded(4 * n * n, 0.0);
    const std::size_t en = 2 * n;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const double re = m.at(r, c).real();
            const double im = m.at(r, c).imag();
            embedded[r * en + c] = re;
            embedded[(r + n) * en + (c + n)] = re;
            embedded[r * en + (c + n)] = -im;
            embedded[(r + n) * en + c] = im;
        }
    }
    const std::vector<double> doubled =
        detail::jacobi_symmetric_eigenvalues(std::move(embedded), en);
    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Each pair holds one eigenvalue twice; averaging cancels the tiny
        // numerical split between the copies.
        eigenvalues[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return eigenvalues;
}

double spectral_norm_hermitian(const ComplexMatrix &m) {
    const std::vector<double> eigenvalues = hermitian_eigenvalues(m);
    return std::max(std::abs(eigenvalues.front()),
                    std::abs(eigenvalues.back()));
}

} // namespace ghzbell
