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

#include "ghzbell/inequalities.hpp"

#include <cmath>
#include <stdexcept>

namespace ghzbell {

namespace {

constexpr double correlation_tol = 1e-12;
constexpr double cross_check_tol = 1e-9;

void validate_params(CHSHParams params) {
    if ((params.m != 1 && params.m != -1) ||
        (params.n != 1 && params.n != -1)) {
        throw std::invalid_argument("sign parameters m, n must be -1 or +1");
    }
}

void validate_correlation(double c, const char *name) {
    if (!(std::abs(c) <= 1.0 + correlation_tol)) {
        throw std::invalid_argument(std::string("correlation ") + name +
                                    " must lie in [-1, 1]");
    }
}

void validate_probability(double p, const char *name) {
    if (!(p >= -correlation_tol && p <= 1.0 + correlation_tol)) {
        throw std::invalid_argument(std::string("probability ") + name +
                                    " must lie in [0, 1]");
    }
}

void validate_sign(int v, const char *name) {
    if (v != 1 && v != -1) {
        throw std::invalid_argument(std::string("assignment value ") + name +
                                    " must be -1 or +1");
    }
}

ComplexMatrix combination_operator(const DichotomicObservable &A,
                                   const DichotomicObservable &a,
                                   const DichotomicObservable &B,
                                   const DichotomicObservable &b,
                                   CHSHParams params) {
    const double m = params.m;
    const double n = params.n;
    const ComplexMatrix MA = A.matrix();
    const ComplexMatrix Ma = a.matrix();
    const ComplexMatrix MB = B.matrix();
    const ComplexMatrix Mb = b.matrix();
    return kron(MA, MB) - complex_t{m, 0.0} * kron(MA, Mb) -
           complex_t{n, 0.0} * kron(Ma, MB) +
           complex_t{-m * n, 0.0} * kron(Ma, Mb);
}

} // namespace

DichotomicObservable::DichotomicObservable(std::array<double, 3> bloch)
    : bloch_(bloch) {
    const double norm = std::sqrt(bloch[0] * bloch[0] + bloch[1] * bloch[1] +
                                  bloch[2] * bloch[2]);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw std::invalid_argument("Bloch vector must have unit norm");
    }
}

DichotomicObservable DichotomicObservable::from_angles(double polar,
                                                       double azimuth) {
    const double sp = std::sin(polar);
    std::array<double, 3> bloch{sp * std::cos(azimuth),
                                sp * std::sin(azimuth), std::cos(polar)};
    // Renormalize away rounding so the unit-norm gate never trips on
    // well-formed angles.
    const double norm = std::sqrt(bloch[0] * bloch[0] + bloch[1] * bloch[1] +
                                  bloch[2] * bloch[2]);
    for (double &component : bloch) {
        component /= norm;
    }
    return DichotomicObservable(bloch);
}

ComplexMatrix DichotomicObservable::matrix() const {
    // bx*X + by*Y + bz*Z.
    ComplexMatrix m(2, 2);
    m.at(0, 0) = complex_t{bloch_[2], 0.0};
    m.at(1, 1) = complex_t{-bloch_[2], 0.0};
    m.at(0, 1) = complex_t{bloch_[0], -bloch_[1]};
    m.at(1, 0) = complex_t{bloch_[0], bloch_[1]};
    return m;
}

double bound_transform(double l) { return (l - 2.0) / 4.0; }

double chsh_value(double c_AB, double c_Ab, double c_aB, double c_ab,
                  CHSHParams params) {
    validate_params(params);
    validate_correlation(c_AB, "c_AB");
    validate_correlation(c_Ab, "c_Ab");
    validate_correlation(c_aB, "c_aB");
    validate_correlation(c_ab, "c_ab");
    const double m = params.m;
    const double n = params.n;
    return std::abs(c_AB - m * c_Ab - n * c_aB - m * n * c_ab);
}

double ch_value(double p_zz, double p_zx, double p_xz, double p_xx) {
    validate_probability(p_zz, "p_zz");
    validate_probability(p_zx, "p_zx");
    validate_probability(p_xz, "p_xz");
    validate_probability(p_xx, "p_xx");
    return p_zz - p_zx - p_xz - p_xx;
}

double lhv_assignment_value(const LHVAssignment &assignment,
                            CHSHParams params) {
    validate_params(params);
    validate_sign(assignment.v_A, "v_A");
    validate_sign(assignment.v_a, "v_a");
    validate_sign(assignment.v_B, "v_B");
    validate_sign(assignment.v_b, "v_b");
    const double m = params.m;
    const double n = params.n;
    return assignment.v_B * (assignment.v_A - n * assignment.v_a) -
           m * assignment.v_b * (assignment.v_A + n * assignment.v_a);
}

LHVResult lhv_max(CHSHParams params) {
    validate_params(params);
    LHVResult result{0.0, {}};
    for (int bits = 0; bits < 16; ++bits) {
        const LHVAssignment assignment{
            (bits & 1) ? -1 : 1,
            (bits & 2) ? -1 : 1,
            (bits & 4) ? -1 : 1,
            (bits & 8) ? -1 : 1,
        };
        const double value = lhv_assignment_value(assignment, params);
        if (std::abs(value) > result.max_value) {
            result.max_value = std::abs(value);
        }
        if (value > 0.0) {
            result.argmax.push_back(assignment);
        }
    }
    return result;
}

double cirelson_norm(const DichotomicObservable &A,
                     const DichotomicObservable &a,
                     const DichotomicObservable &B,
                     const DichotomicObservable &b, CHSHParams params) {
    validate_params(params);
    const double direct =
        spectral_norm_hermitian(combination_operator(A, a, B, b, params));
    const double via_square = cirelson_norm_via_square(A, a, B, b, params);
    if (std::abs(direct - via_square) > cross_check_tol) {
        throw std::logic_error(
            "combination-norm cross-check failed: the direct eigenvalue and "
            "square-identity paths disagree");
    }
    return direct;
}

double cirelson_norm_via_square(const DichotomicObservable &A,
                                const DichotomicObservable &a,
                                const DichotomicObservable &B,
                                const DichotomicObservable &b,
                                CHSHParams params) {
    validate_params(params);
    const double mn = static_cast<double>(params.m) * params.n;
    const ComplexMatrix square =
        complex_t{4.0, 0.0} * ComplexMatrix::identity(4) +
        complex_t{-mn, 0.0} * kron(commutator(A.matrix(), a.matrix()),
                                   commutator(B.matrix(), b.matrix()));
    const std::vector<double> eigenvalues = hermitian_eigenvalues(square);
    const double largest = eigenvalues.back();
    if (largest < -1e-12) {
        throw std::logic_error("squared combination has a negative spectrum");
    }
    return std::sqrt(std::max(largest, 0.0));
}

InequalityReport make_chsh_report(double c_AB, double c_Ab, double c_aB,
                                  double c_ab, CHSHParams params) {
    InequalityReport report;
    report.form = InequalityForm::kCHSH;
    report.terms = {{"c_zz", c_AB}, {"c_zx", c_Ab}, {"c_xz", c_aB},
                    {"c_xx", c_ab}};
    report.combination_value = chsh_value(c_AB, c_Ab, c_aB, c_ab, params);
    report.lhv_bound = kLhvBoundChsh;
    report.cirelson_bound = kCirelsonBoundChsh;
    report.algebraic_max = kAlgebraicMaxChsh;
    return report;
}

InequalityReport make_ch_report(double p_zz, double p_zx, double p_xz,
                                double p_xx) {
    InequalityReport report;
    report.form = InequalityForm::kCH;
    report.terms = {{"p_zz", p_zz}, {"p_zx", p_zx}, {"p_xz", p_xz},
                    {"p_xx", p_xx}};
    report.combination_value = ch_value(p_zz, p_zx, p_xz, p_xx);
    report.lhv_bound = bound_transform(kLhvBoundChsh);
    report.cirelson_bound = bound_transform(kCirelsonBoundChsh);
    report.algebraic_max = bound_transform(kAlgebraicMaxChsh);
    return report;
}

} // namespace ghzbell
