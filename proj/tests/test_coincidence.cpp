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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "ghzbell/coincidence.hpp"
#include "ghzbell/measurement.hpp"
#include "oracles.hpp"

using ghzbell::ch_probabilities;
using ghzbell::CHProbabilities;
using ghzbell::CoincidenceTable;
using ghzbell::joint_distribution;
using ghzbell::load_counts;
using ghzbell::make_ghz;
using ghzbell::make_weighted_ghz;
using ghzbell::MeasurementSetting;
using ghzbell::outcome_sign;
using ghzbell::OutcomeDistribution;
using ghzbell::OutcomeEvent;
using ghzbell::per_setting_p_zx;
using ghzbell::PZXSource;
using ghzbell::reconstruct_p_xx;
using ghzbell::reconstruct_p_zz;
using ghzbell::sample;
using ghzbell::save_counts;
using ghzbell::six_term_bound;
using ghzbell::StateVector;
using ghzbell::test::born_oracle;

namespace {

constexpr double tol = 1e-12;

OutcomeDistribution dist_for(const StateVector &state, const char *label,
                             double visibility) {
    return joint_distribution(state, MeasurementSetting::parse(label),
                              visibility);
}

CoincidenceTable sampled_table(const StateVector &state, double visibility,
                               std::size_t shots, std::uint64_t base_seed) {
    CoincidenceTable table;
    std::uint64_t seed = base_seed;
    for (const char *label : {"ZZZ", "ZXX", "XZX", "XXZ", "XXX"}) {
        table.add_events(sample(state, MeasurementSetting::parse(label),
                                shots, visibility, seed++));
    }
    return table;
}

// Independent recomputation of a reconstructed probability: sum the oracle's
// pattern probabilities selected by a predicate given per-location signs.
template <typename Predicate>
double oracle_sum(const StateVector &state, const char *label,
                  double visibility, Predicate keep) {
    const std::vector<double> probs = born_oracle(state, label, visibility);
    double total = 0.0;
    for (std::size_t pattern = 0; pattern < 8; ++pattern) {
        const int s0 = outcome_sign(pattern, 0, 3);
        const int s1 = outcome_sign(pattern, 1, 3);
        const int s2 = outcome_sign(pattern, 2, 3);
        if (keep(s0, s1, s2)) {
            total += probs[pattern];
        }
    }
    return total;
}

} // namespace

TEST_CASE("table bookkeeping", "[coincidence]") {
    CoincidenceTable table;
    const std::array<int, 3> ppm{1, 1, -1};
    const std::array<int, 3> mmm{-1, -1, -1};
    table.add("ZZZ", ppm, 3);
    table.add("ZZZ", ppm, 2);
    table.add("ZZZ", mmm, 5);

    CHECK(table.has_setting("ZZZ"));
    CHECK_FALSE(table.has_setting("XXX"));
    CHECK(table.count("ZZZ", ppm) == 5);
    CHECK(table.count("ZZZ", mmm) == 5);
    CHECK(table.total_shots("ZZZ") == 10);
    CHECK(table.frequency("ZZZ", ppm) == Catch::Approx(0.5).margin(tol));
    CHECK_THROWS_AS(table.counts("XXX"), std::runtime_error);

    const std::array<int, 3> bad{1, 0, 1};
    CHECK_THROWS_AS(table.add("ZZZ", bad, 1), std::invalid_argument);
    CHECK_THROWS_AS(table.add("ZZ", ppm, 1), std::invalid_argument);

    // A setting recorded with only zero counts exists but has no frequency.
    table.add("XXX", ppm, 0);
    CHECK(table.has_setting("XXX"));
    CHECK(table.total_shots("XXX") == 0);
    CHECK_THROWS_AS(table.frequency("XXX", ppm), std::runtime_error);
    CHECK_THROWS_AS(reconstruct_p_xx(table), std::runtime_error);

    const std::vector<OutcomeEvent> events{
        {"ZXX", {1, -1, 1}}, {"ZXX", {1, -1, 1}}, {"XXZ", {-1, 1, 1}}};
    const CoincidenceTable from_events = CoincidenceTable::from_events(events);
    const std::array<int, 3> pmp{1, -1, 1};
    CHECK(from_events.count("ZXX", pmp) == 2);
    CHECK(from_events.setting_labels() ==
          std::vector<std::string>{"XXZ", "ZXX"});
}

TEST_CASE("reconstruction on exact distributions of the ideal state",
          "[coincidence]") {
    const StateVector state = make_ghz(3);

    CHECK(reconstruct_p_zz(dist_for(state, "ZZZ", 1.0)) ==
          Catch::Approx(0.75).margin(tol));
    CHECK(six_term_bound(dist_for(state, "ZXX", 1.0),
                         dist_for(state, "XZX", 1.0),
                         dist_for(state, "XXZ", 1.0)) ==
          Catch::Approx(0.0).margin(tol));
    CHECK(per_setting_p_zx(dist_for(state, "ZXX", 1.0)) ==
          Catch::Approx(0.0).margin(tol));
    CHECK(per_setting_p_zx(dist_for(state, "XZX", 1.0)) ==
          Catch::Approx(0.0).margin(tol));
    CHECK(reconstruct_p_xx(dist_for(state, "XXX", 1.0)) ==
          Catch::Approx(0.25).margin(tol));

    // Fully mixed outcomes: every pattern at 1/8.
    CHECK(reconstruct_p_zz(dist_for(state, "ZZZ", 0.0)) ==
          Catch::Approx(0.5).margin(tol));
    CHECK(six_term_bound(dist_for(state, "ZXX", 0.0),
                         dist_for(state, "XZX", 0.0),
                         dist_for(state, "XXZ", 0.0)) ==
          Catch::Approx(0.75).margin(tol));
    CHECK(per_setting_p_zx(dist_for(state, "ZXX", 0.0)) ==
          Catch::Approx(0.25).margin(tol));
    CHECK(reconstruct_p_xx(dist_for(state, "XXX", 0.0)) ==
          Catch::Approx(0.25).margin(tol));

    CHECK_THROWS_AS(per_setting_p_zx(dist_for(state, "XXX", 1.0)),
                    std::invalid_argument);
}

TEST_CASE("reconstruction follows the closed forms in weight and visibility",
          "[coincidence]") {
    for (double theta : {0.4, std::numbers::pi / 4.0}) {
        const StateVector state = make_weighted_ghz(theta);
        const double s = std::sin(2.0 * theta);
        for (double visibility : {0.0, 0.3, 2.0 / 3.0, 1.0}) {
            CAPTURE(theta, visibility);
            CHECK(reconstruct_p_zz(dist_for(state, "ZZZ", visibility)) ==
                  Catch::Approx(0.5 + 0.25 * visibility * s).margin(tol));
            CHECK(six_term_bound(dist_for(state, "ZXX", visibility),
                                 dist_for(state, "XZX", visibility),
                                 dist_for(state, "XXZ", visibility)) ==
                  Catch::Approx(0.75 * (1.0 - visibility * s)).margin(tol));
            CHECK(per_setting_p_zx(dist_for(state, "XZX", visibility)) ==
                  Catch::Approx(0.25 * (1.0 - visibility * s)).margin(tol));
            // The unanimous all-X probability is insensitive to both knobs.
            CHECK(reconstruct_p_xx(dist_for(state, "XXX", visibility)) ==
                  Catch::Approx(0.25).margin(tol));

            // Same quantities pushed through the projector oracle.
            CHECK(reconstruct_p_zz(dist_for(state, "ZZZ", visibility)) ==
                  Catch::Approx(oracle_sum(state, "ZZZ", visibility,
                                           [](int s0, int s1, int s2) {
                                               return (s0 < 0) + (s1 < 0) +
                                                          (s2 < 0) >=
                                                      2;
                                           }))
                      .margin(tol));
            CHECK(per_setting_p_zx(dist_for(state, "ZXX", visibility)) ==
                  Catch::Approx(oracle_sum(state, "ZXX", visibility,
                                           [](int s0, int s1, int s2) {
                                               return s0 < 0 && s1 != s2;
                                           }))
                      .margin(tol));
            CHECK(reconstruct_p_xx(dist_for(state, "XXX", visibility)) ==
                  Catch::Approx(oracle_sum(state, "XXX", visibility,
                                           [](int s0, int s1, int s2) {
                                               return s0 == s1 && s1 == s2;
                                           }))
                      .margin(tol));
        }
    }
}

TEST_CASE("assembled CH terms and the source switch", "[coincidence]") {
    const CoincidenceTable table = sampled_table(make_ghz(3), 0.0, 4000, 21);

    const CHProbabilities per_setting =
        ch_probabilities(table, PZXSource::kPerSetting);
    CHECK(per_setting.zx_xz_source == PZXSource::kPerSetting);
    CHECK(per_setting.p_zx ==
          Catch::Approx(per_setting_p_zx(table, "ZXX")).margin(tol));
    CHECK(per_setting.p_xz ==
          Catch::Approx(per_setting_p_zx(table, "XZX")).margin(tol));

    const CHProbabilities bounded =
        ch_probabilities(table, PZXSource::kSixTermBound);
    CHECK(bounded.zx_xz_source == PZXSource::kSixTermBound);
    CHECK(bounded.p_zx == Catch::Approx(six_term_bound(table)).margin(tol));
    CHECK(bounded.p_xz == bounded.p_zx);
    CHECK(bounded.p_zz == per_setting.p_zz);
    CHECK(bounded.p_xx == per_setting.p_xx);

    // Each per-setting term is dominated by the shared six-term bound.
    CHECK(per_setting.p_zx <= bounded.p_zx + tol);
    CHECK(per_setting.p_xz <= bounded.p_xz + tol);
}

TEST_CASE("sampled reconstruction matches the exact values at five sigma",
          "[coincidence]") {
    const StateVector state = make_ghz(3);
    const double visibility = 0.55;
    const std::size_t shots = 40000;
    const CoincidenceTable table =
        sampled_table(state, visibility, shots, 6000);

    const auto check_within = [&](double estimate, double exact) {
        const double se = std::sqrt(exact * (1.0 - exact) /
                                    static_cast<double>(shots));
        CHECK(std::abs(estimate - exact) <= 5.0 * se);
    };
    check_within(reconstruct_p_zz(table),
                 reconstruct_p_zz(dist_for(state, "ZZZ", visibility)));
    check_within(per_setting_p_zx(table, "ZXX"),
                 per_setting_p_zx(dist_for(state, "ZXX", visibility)));
    check_within(per_setting_p_zx(table, "XZX"),
                 per_setting_p_zx(dist_for(state, "XZX", visibility)));
    check_within(reconstruct_p_xx(table),
                 reconstruct_p_xx(dist_for(state, "XXX", visibility)));
    // Three independent settings: their standard errors add in quadrature,
    // bounded by three times the single-setting error.
    const double six_exact = six_term_bound(dist_for(state, "ZXX", visibility),
                                            dist_for(state, "XZX", visibility),
                                            dist_for(state, "XXZ", visibility));
    const double six_se = 3.0 * std::sqrt(0.25 / static_cast<double>(shots));
    CHECK(std::abs(six_term_bound(table) - six_exact) <= 5.0 * six_se);
}

TEST_CASE("counts files round-trip byte for byte", "[coincidence]") {
    const CoincidenceTable table = sampled_table(make_ghz(3), 0.8, 500, 99);

    std::ostringstream first_out;
    save_counts(table, first_out);
    const std::string first = first_out.str();

    std::istringstream in(first);
    const CoincidenceTable loaded = load_counts(in);
    CHECK(loaded == table);

    std::ostringstream second_out;
    save_counts(loaded, second_out);
    CHECK(second_out.str() == first);

    // Header line and sorted settings with all eight patterns each.
    CHECK(first.rfind("# setting o1 o2 o3 count\n", 0) == 0);
    CHECK(first.find("XXX 1 1 1 ") != std::string::npos);
    CHECK(first.find("ZZZ -1 -1 -1 ") != std::string::npos);

    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "ghzbell_counts_test.txt";
    save_counts(table, path);
    const CoincidenceTable from_file = load_counts(path);
    CHECK(from_file == table);
    std::filesystem::remove(path);
}

TEST_CASE("counts parser", "[coincidence]") {
    SECTION("records, comments, and accumulation") {
        std::istringstream in("# comment line\n"
                              "\n"
                              "ZXX -1 1 -1 532\n"
                              "ZXX -1 1 -1 18  # same pattern again\n"
                              "XXX 1 1 1 7\n");
        const CoincidenceTable table = load_counts(in);
        const std::array<int, 3> mpm{-1, 1, -1};
        CHECK(table.count("ZXX", mpm) == 550);
        CHECK(table.total_shots("XXX") == 7);
        CHECK(table.setting_labels() ==
              std::vector<std::string>{"XXX", "ZXX"});
    }

    SECTION("zero counts are valid records") {
        std::istringstream in("XXZ 1 1 1 0\n");
        const CoincidenceTable table = load_counts(in);
        CHECK(table.has_setting("XXZ"));
        CHECK(table.total_shots("XXZ") == 0);
    }

    SECTION("malformed input names the offending line") {
        const auto expect_error = [](const char *text,
                                     const char *needle) {
            std::istringstream in(text);
            try {
                load_counts(in);
                FAIL("expected a parse error for: " << text);
            } catch (const std::runtime_error &error) {
                CHECK(std::string(error.what()).find(needle) !=
                      std::string::npos);
            }
        };
        expect_error("ZXX -1 1 -1\n", "line 1");
        expect_error("\nQXX -1 1 -1 4\n", "line 2");
        expect_error("ZXXZ -1 1 -1 1 4\n", "trailing");
        expect_error("ZXX -1 0 -1 4\n", "must be -1 or 1");
        expect_error("ZXX -1 1 -1 -4\n", "nonnegative");
        expect_error("ZXX -1 1 -1 4x\n", "nonnegative");
    }

    SECTION("missing files are reported") {
        CHECK_THROWS_AS(load_counts(std::filesystem::path(
                            "/nonexistent/ghzbell/counts.txt")),
                        std::runtime_error);
    }
}
