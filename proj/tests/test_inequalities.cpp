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

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "ghzbell/inequalities.hpp"
#include "ghzbell/linalg.hpp"
#include "oracles.hpp"

using ghzbell::bound_transform;
using ghzbell::ch_value;
using ghzbell::chsh_value;
using ghzbell::CHSHParams;
using ghzbell::commutator;
using ghzbell::complex_t;
using ghzbell::ComplexMatrix;
using ghzbell::DichotomicObservable;
using ghzbell::hermitian_eigenvalues;
using ghzbell::InequalityForm;
using ghzbell::kAlgebraicMaxChsh;
using ghzbell::kCirelsonBoundChsh;
using ghzbell::kLhvBoundChsh;
using ghzbell::LHVAssignment;
using ghzbell::lhv_assignment_value;
using ghzbell::lhv_max;
using ghzbell::spectral_norm_hermitian;
using ghzbell::test::random_hermitian;
using ghzbell::test::spectral_norm_oracle;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double root2 = std::numbers::sqrt2;

DichotomicObservable random_direction(std::mt19937_64 &rng) {
    const double z =
        2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
    const double azimuth =
        2.0 * pi * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    return DichotomicObservable::from_angles(std::acos(z), azimuth);
}

std::array<DichotomicObservable, 4> canonical_observables() {
    return {DichotomicObservable::from_angles(0.0, 0.0),
            DichotomicObservable::from_angles(pi / 2.0, 0.0),
            DichotomicObservable::from_angles(pi / 4.0, 0.0),
            DichotomicObservable::from_angles(pi / 4.0, pi)};
}

} // namespace

TEST_CASE("combination values of reference correlation sets",
          "[inequalities]") {
    const CHSHParams standard{1, 1};
    CHECK(chsh_value(1.0, -1.0, -1.0, -1.0, standard) ==
          Catch::Approx(4.0).margin(1e-15));
    CHECK(chsh_value(1.0, 1.0, 1.0, -1.0, standard) ==
          Catch::Approx(0.0).margin(1e-15));
    const double q = 1.0 / root2;
    CHECK(chsh_value(q, -q, -q, -q, standard) ==
          Catch::Approx(2.0 * root2).margin(1e-15));
    // The combination is reported as an absolute value.
    CHECK(chsh_value(-1.0, 1.0, 1.0, 1.0, standard) ==
          Catch::Approx(4.0).margin(1e-15));

    CHECK_THROWS_AS(chsh_value(1.1, 0.0, 0.0, 0.0, standard),
                    std::invalid_argument);
    CHECK_THROWS_AS(chsh_value(0.0, 0.0, 0.0, 0.0, CHSHParams{2, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(chsh_value(0.0, 0.0, 0.0, 0.0, CHSHParams{1, 0}),
                    std::invalid_argument);
}

TEST_CASE("probability-form values and the bound transform",
          "[inequalities]") {
    CHECK(ch_value(0.75, 0.0, 0.0, 0.25) ==
          Catch::Approx(0.5).margin(1e-15));
    CHECK(ch_value(0.0, 0.25, 0.25, 0.0) ==
          Catch::Approx(-0.5).margin(1e-15));
    CHECK(ch_value(0.5, 0.25, 0.25, 0.25) ==
          Catch::Approx(-0.25).margin(1e-15));

    CHECK_THROWS_AS(ch_value(-0.1, 0.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ch_value(0.0, 1.2, 0.0, 0.0), std::invalid_argument);

    CHECK(bound_transform(kLhvBoundChsh) == Catch::Approx(0.0).margin(1e-15));
    CHECK(bound_transform(kCirelsonBoundChsh) ==
          Catch::Approx((root2 - 1.0) / 2.0).margin(1e-15));
    CHECK(bound_transform(kAlgebraicMaxChsh) ==
          Catch::Approx(0.5).margin(1e-15));
}

TEST_CASE("deterministic local strategies never exceed two",
          "[inequalities]") {
    for (int m : {-1, 1}) {
        for (int n : {-1, 1}) {
            const CHSHParams params{m, n};
            CAPTURE(m, n);

            int positive = 0;
            for (int bits = 0; bits < 16; ++bits) {
                const LHVAssignment assignment{
                    (bits & 1) ? 1 : -1, (bits & 2) ? 1 : -1,
                    (bits & 4) ? 1 : -1, (bits & 8) ? 1 : -1};
                const double value =
                    lhv_assignment_value(assignment, params);
                // Every deterministic strategy lands exactly on +/-2.
                CHECK((value == 2.0 || value == -2.0));
                // Cross-check against the expanded four-product form.
                const double expanded =
                    assignment.v_A * assignment.v_B -
                    m * assignment.v_A * assignment.v_b -
                    n * assignment.v_a * assignment.v_B -
                    m * n * assignment.v_a * assignment.v_b;
                CHECK(value == expanded);
                positive += value > 0.0 ? 1 : 0;
            }
            CHECK(positive == 8);

            const auto result = lhv_max(params);
            CHECK(result.max_value == 2.0);
            REQUIRE(result.argmax.size() == 8);
            for (const LHVAssignment &assignment : result.argmax) {
                CHECK(lhv_assignment_value(assignment, params) == 2.0);
            }
        }
    }
}

TEST_CASE("quantum ceiling for the canonical observables", "[inequalities]") {
    const auto [A, a, B, b] = canonical_observables();
    const CHSHParams params{1, 1};

    const double norm = cirelson_norm(A, a, B, b, params);
    CHECK(norm == Catch::Approx(2.0 * root2).margin(1e-9));
    CHECK(cirelson_norm_via_square(A, a, B, b, params) ==
          Catch::Approx(norm).margin(1e-9));

    // Compatible measurements on one side collapse the ceiling to the
    // local bound.
    CHECK(cirelson_norm(A, A, B, b, params) ==
          Catch::Approx(2.0).margin(1e-9));
    CHECK(cirelson_norm(A, a, B, B, params) ==
          Catch::Approx(2.0).margin(1e-9));
}

TEST_CASE("quantum ceiling holds over random observables", "[inequalities]") {
    std::mt19937_64 rng(90210);
    const CHSHParams params{1, 1};
    double largest = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const DichotomicObservable A = random_direction(rng);
        const DichotomicObservable a = random_direction(rng);
        const DichotomicObservable B = random_direction(rng);
        const DichotomicObservable b = random_direction(rng);
        const double direct = cirelson_norm(A, a, B, b, params);
        const double via_square =
            cirelson_norm_via_square(A, a, B, b, params);
        CAPTURE(trial);
        REQUIRE(direct <= 2.0 * root2 + 1e-9);
        REQUIRE(std::abs(direct - via_square) <= 1e-9);

        // Every 50th case also goes through the independent norm oracle.
        if (trial % 50 == 0) {
            const ComplexMatrix Am = A.matrix();
            const ComplexMatrix am = a.matrix();
            const ComplexMatrix Bm = B.matrix();
            const ComplexMatrix bm = b.matrix();
            const ComplexMatrix combination =
                kron(Am, Bm) - kron(Am, bm) - kron(am, Bm) - kron(am, bm);
            REQUIRE(std::abs(direct - spectral_norm_oracle(combination)) <=
                    1e-8);
        }
        largest = std::max(largest, direct);
    }
    // Random quadruples come close to the ceiling somewhere in 1000 tries.
    CHECK(largest > 2.7);
    CHECK(largest <= 2.0 * root2 + 1e-9);
}

TEST_CASE("commutator norms obey the submultiplicative bound",
          "[inequalities]") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = (trial % 2 == 0) ? 2 : 4;
        const ComplexMatrix F = random_hermitian(n, rng);
        const ComplexMatrix G = random_hermitian(n, rng);
        // [F, G] is anti-Hermitian for Hermitian F, G; i[F, G] is Hermitian
        // with the same spectral norm.
        const ComplexMatrix iFG = complex_t{0.0, 1.0} * commutator(F, G);
        const double lhs = spectral_norm_hermitian(iFG);
        const double rhs = 2.0 * spectral_norm_hermitian(F) *
                           spectral_norm_hermitian(G);
        CAPTURE(trial, n);
        REQUIRE(lhs <= rhs + 1e-9);
    }
}

TEST_CASE("hermitian eigenvalues", "[inequalities]") {
    SECTION("closed-form 2x2 case") {
        // trace 3, determinant 0.
        const ComplexMatrix m(2, 2,
                              {complex_t{2.0, 0.0}, complex_t{1.0, -1.0},
                               complex_t{1.0, 1.0}, complex_t{1.0, 0.0}});
        const auto eigen = hermitian_eigenvalues(m);
        REQUIRE(eigen.size() == 2);
        CHECK(eigen[0] == Catch::Approx(0.0).margin(1e-12));
        CHECK(eigen[1] == Catch::Approx(3.0).margin(1e-12));
    }

    SECTION("trace moments of random Hermitian matrices") {
        std::mt19937_64 rng(777);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 4;
            const ComplexMatrix m = random_hermitian(n, rng);
            const auto eigen = hermitian_eigenvalues(m);
            REQUIRE(eigen.size() == n);
            for (std::size_t i = 1; i < n; ++i) {
                CHECK(eigen[i - 1] <= eigen[i]);
            }
            const ComplexMatrix m2 = m * m;
            const ComplexMatrix m3 = m2 * m;
            double s1 = 0.0;
            double s2 = 0.0;
            double s3 = 0.0;
            double t1 = 0.0;
            double t2 = 0.0;
            double t3 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                s1 += eigen[i];
                s2 += eigen[i] * eigen[i];
                s3 += eigen[i] * eigen[i] * eigen[i];
                t1 += m.at(i, i).real();
                t2 += m2.at(i, i).real();
                t3 += m3.at(i, i).real();
            }
            CAPTURE(trial);
            CHECK(s1 == Catch::Approx(t1).margin(1e-9));
            CHECK(s2 == Catch::Approx(t2).margin(1e-9));
            CHECK(s3 == Catch::Approx(t3).margin(1e-9));
        }
    }

    SECTION("shape and symmetry validation") {
        CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, 3)),
                        std::invalid_argument);
        const ComplexMatrix skew(2, 2,
                                 {complex_t{0.0, 0.0}, complex_t{1.0, 0.0},
                                  complex_t{0.0, 0.0}, complex_t{0.0, 0.0}});
        CHECK_THROWS_AS(hermitian_eigenvalues(skew), std::invalid_argument);
    }

    SECTION("known tridiagonal real case through the Jacobi kernel") {
        const std::vector<double> a{2.0, 1.0, 0.0,
                                    1.0, 2.0, 1.0,
                                    0.0, 1.0, 2.0};
        const auto eigen =
            ghzbell::detail::jacobi_symmetric_eigenvalues(a, 3);
        REQUIRE(eigen.size() == 3);
        CHECK(eigen[0] == Catch::Approx(2.0 - root2).margin(1e-12));
        CHECK(eigen[1] == Catch::Approx(2.0).margin(1e-12));
        CHECK(eigen[2] == Catch::Approx(2.0 + root2).margin(1e-12));
    }
}

TEST_CASE("dichotomic observables square to the identity", "[inequalities]") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const DichotomicObservable obs = random_direction(rng);
        const std::array<double, 3> &bloch = obs.bloch();
        const double norm = std::sqrt(bloch[0] * bloch[0] +
                                      bloch[1] * bloch[1] +
                                      bloch[2] * bloch[2]);
        CHECK(norm == Catch::Approx(1.0).margin(1e-12));

        const ComplexMatrix m = obs.matrix();
        CHECK(m.is_hermitian());
        const ComplexMatrix square = m * m;
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                const complex_t expected =
                    (r == c) ? complex_t{1.0, 0.0} : complex_t{0.0, 0.0};
                CHECK(std::abs(square.at(r, c) - expected) < 1e-12);
            }
        }
        const auto eigen = hermitian_eigenvalues(m);
        CHECK(eigen[0] == Catch::Approx(-1.0).margin(1e-12));
        CHECK(eigen[1] == Catch::Approx(1.0).margin(1e-12));
    }

    CHECK_THROWS_AS(DichotomicObservable({0.5, 0.5, 0.5}),
                    std::invalid_argument);
    CHECK_NOTHROW(DichotomicObservable({0.0, 0.0, 1.0}));
}

TEST_CASE("reports carry the terms and matched bounds", "[inequalities]") {
    const auto chsh = ghzbell::make_chsh_report(1.0, -1.0, -1.0, -1.0,
                                                CHSHParams{1, 1});
    CHECK(chsh.form == InequalityForm::kCHSH);
    REQUIRE(chsh.terms.size() == 4);
    CHECK(chsh.terms[0].first == "c_zz");
    CHECK(chsh.terms[3].second == -1.0);
    CHECK(chsh.combination_value == Catch::Approx(4.0).margin(1e-15));
    CHECK(chsh.lhv_bound == 2.0);
    CHECK(chsh.cirelson_bound ==
          Catch::Approx(2.0 * root2).margin(1e-15));
    CHECK(chsh.algebraic_max == 4.0);

    const auto ch = ghzbell::make_ch_report(0.75, 0.0, 0.0, 0.25);
    CHECK(ch.form == InequalityForm::kCH);
    REQUIRE(ch.terms.size() == 4);
    CHECK(ch.terms[0].first == "p_zz");
    CHECK(ch.combination_value == Catch::Approx(0.5).margin(1e-15));
    CHECK(ch.lhv_bound == Catch::Approx(0.0).margin(1e-15));
    CHECK(ch.cirelson_bound ==
          Catch::Approx((root2 - 1.0) / 2.0).margin(1e-15));
    CHECK(ch.algebraic_max == Catch::Approx(0.5).margin(1e-15));
}
