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
 * The two inequality forms and their reference bounds.
 *
 * The correlation form combines four two-party correlations as
 * |c_AB - m*c_Ab - n*c_aB - m*n*c_ab| with sign parameters m, n in {-1,+1}.
 * Local hidden-variable models keep it at or below 2 (proved here by
 * enumerating all 16 deterministic assignments), quantum states of an
 * unselected pair reach at most 2*sqrt(2) (verified here as the spectral
 * norm of the combination operator), and the algebraic maximum is 4.
 *
 * The probability (CH) form p_zz - p_zx - p_xz - p_xx carries the same
 * bounds mapped through (l - 2) / 4.
 */

#pragma once

#include <array>
#include <numbers>
#include <string>
#include <vector>

#include "ghzbell/linalg.hpp"

namespace ghzbell {

/// Sign parameters of the correlation combination; both must be -1 or +1.
struct CHSHParams {
    int m = 1;
    int n = 1;
};

/// A +/-1-valued spin observable, defined by its unit Bloch direction.
class DichotomicObservable {
  public:
    /// @throws std::invalid_argument unless |bloch| = 1 within 1e-12
    explicit DichotomicObservable(std::array<double, 3> bloch);
    /// Direction (sin p cos a, sin p sin a, cos p) from polar/azimuth angles.
    static DichotomicObservable from_angles(double polar, double azimuth);

    const std::array<double, 3> &bloch() const { return bloch_; }
    /// The observable as a 2x2 Hermitian matrix with eigenvalues +/-1.
    ComplexMatrix matrix() const;

  private:
    std::array<double, 3> bloch_;
};

/// One deterministic local strategy: preassigned +/-1 answers for all four
/// measurements.
struct LHVAssignment {
    int v_A;
    int v_a;
    int v_B;
    int v_b;
};

enum class InequalityForm { kCHSH, kCH };

/// A combination value next to its three reference bounds, with the four
/// input terms kept by name for reporting.
struct InequalityReport {
    InequalityForm form;
    std::vector<std::pair<std::string, double>> terms;
    double combination_value;
    double lhv_bound;
    double cirelson_bound;
    double algebraic_max;
};

inline constexpr double kLhvBoundChsh = 2.0;
inline constexpr double kCirelsonBoundChsh = 2.0 * std::numbers::sqrt2;
inline constexpr double kAlgebraicMaxChsh = 4.0;

/// (l - 2) / 4: maps a correlation-form bound to the probability form.
double bound_transform(double l);

/**
 * |c_AB - m*c_Ab - n*c_aB - m*n*c_ab|.
 *
 * @throws std::invalid_argument if a correlation leaves [-1, 1] by more
 *         than 1e-12, or the sign parameters are invalid
 */
double chsh_value(double c_AB, double c_Ab, double c_aB, double c_ab,
                  CHSHParams params);

/**
 * p_zz - p_zx - p_xz - p_xx, signed. Local models keep it in [-1, 0].
 *
 * @throws std::invalid_argument if an input leaves [0, 1] by more than 1e-12
 */
double ch_value(double p_zz, double p_zx, double p_xz, double p_xx);

/// Value of the combination under one deterministic assignment:
/// v_B*(v_A - n*v_a) - m*v_b*(v_A + n*v_a). Always -2 or +2.
double lhv_assignment_value(const LHVAssignment &assignment,
                            CHSHParams params);

struct LHVResult {
    double max_value;
    std::vector<LHVAssignment> argmax;
};

/// Enumerates all 16 deterministic assignments; returns the maximum
/// |combination| (always exactly 2) and the assignments attaining +2.
LHVResult lhv_max(CHSHParams params);

/**
 * Largest possible |combination| over quantum states of one unselected
 * pair, for these four observables: the spectral norm of
 * A x B - m A x b - n a x B - m n a x b. At most 2*sqrt(2).
 *
 * Internally cross-checked against the square-identity path; disagreement
 * beyond 1e-9 raises std::logic_error.
 */
double cirelson_norm(const DichotomicObservable &A,
                     const DichotomicObservable &a,
                     const DichotomicObservable &B,
                     const DichotomicObservable &b, CHSHParams params);

/**
 * The same norm through the operator identity
 * C^2 = 4 I - m n [A, a] x [B, b]: the square root of the largest
 * eigenvalue of the right-hand side.
 */
double cirelson_norm_via_square(const DichotomicObservable &A,
                                const DichotomicObservable &a,
                                const DichotomicObservable &B,
                                const DichotomicObservable &b,
                                CHSHParams params);

/// Correlation-form report with bounds (2, 2*sqrt(2), 4).
InequalityReport make_chsh_report(double c_AB, double c_Ab, double c_aB,
                                  double c_ab, CHSHParams params);

/// Probability-form report with bounds (0, (sqrt(2)-1)/2, 1/2).
InequalityReport make_ch_report(double p_zz, double p_zx, double p_xz,
                                double p_xx);

} // namespace ghzbell
