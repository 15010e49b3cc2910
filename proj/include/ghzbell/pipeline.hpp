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
 * End-to-end experiment runs: prepare the state, measure the five standard
 * settings (ZZZ, ZXX, XZX, XXZ, XXX), estimate the four labeled
 * correlations and the four CH probabilities, and evaluate both inequality
 * forms against their bounds.
 *
 * Three entry points cover the three data sources: exact distributions,
 * seeded sampling (which also yields the coincidence table for persistence),
 * and an externally supplied coincidence table.
 *
 * Seed schedule: setting number s (in the order above) samples with seed
 * base_seed + s, so runs are reproducible per setting and independent of
 * how many settings a caller consumes.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghzbell/coincidence.hpp"
#include "ghzbell/inequalities.hpp"
#include "ghzbell/postselect.hpp"

namespace ghzbell {

/// The five run types of one full experiment, in seed-schedule order.
inline constexpr std::array<std::string_view, 5> kStandardSettings{
    "ZZZ", "ZXX", "XZX", "XXZ", "XXX"};

/// Inputs of one run. Defaults reproduce the ideal protocol: balanced
/// state, no noise, outcome-based labeling.
struct ExperimentConfig {
    double theta = 0.78539816339744830962; // pi/4
    double visibility = 1.0;
    std::size_t shots = 100000;
    std::uint64_t seed = 1;
    LabelingStrategy strategy = LabelingStrategy::outcome_based();
    /// Independent sampling streams per setting; changing this changes
    /// which events are drawn but keeps every value reproducible.
    std::size_t partitions = 1;
};

/// One correlation term: sampled runs carry the estimate's uncertainty,
/// exact runs leave it empty.
struct ReportTerm {
    double value;
    std::optional<double> standard_error;
    std::optional<std::size_t> events_used;
};

/// Everything one run produced. Fields that only exist for some data
/// sources (state parameters, shot counts) are optional.
struct ExperimentReport {
    enum class Mode { kExact, kSampled, kCounts };

    Mode mode;
    std::optional<double> theta;
    std::optional<double> visibility;
    LabelingStrategy strategy = LabelingStrategy::outcome_based();
    ReportTerm c_zz;
    ReportTerm c_zx;
    ReportTerm c_xz;
    ReportTerm c_xx;
    CHProbabilities probabilities;
    double six_term;
    InequalityReport chsh;
    InequalityReport ch;
    std::optional<std::size_t> shots;
    std::optional<std::uint64_t> seed;
};

/// Exact run: every quantity from closed-form distributions, no sampling.
ExperimentReport run_exact(const ExperimentConfig &config);

struct SampledRun {
    ExperimentReport report;
    CoincidenceTable table;
};

/**
 * Sampled run over all five settings.
 *
 * @throws std::runtime_error if postselection leaves an estimator with no
 *         accepted events
 */
SampledRun run_sampled(const ExperimentConfig &config);

/**
 * Runs both pipelines on an externally supplied coincidence table. The
 * table must contain all five standard settings.
 */
ExperimentReport run_from_counts(const CoincidenceTable &table,
                                 const LabelingStrategy &strategy);

enum class SweepParam { kVisibility, kTheta };

struct SweepPoint {
    double value;
    double chsh;
    double ch;
};

struct SweepResult {
    SweepParam param;
    std::vector<SweepPoint> points;
};

/**
 * Exact-path parameter sweep over an inclusive evenly spaced grid.
 *
 * @throws std::invalid_argument if steps < 2 or the range leaves the
 *         parameter's domain (visibility must stay within [0, 1])
 */
SweepResult run_sweep(const ExperimentConfig &base, SweepParam param,
                      double from, double to, std::size_t steps);

/// "outcome" or "fixed:<location>"; the CLI accepts the same syntax back.
std::string strategy_name(const LabelingStrategy &strategy);

/// Human-readable report.
std::string render_text(const ExperimentReport &report);
/// JSON object with fields {state_params, visibility, strategy, terms,
/// ch_value, chsh_value, bounds, shots, seed}.
std::string render_json(const ExperimentReport &report);

/// CSV with header param,value,chsh,ch,bound_lhv,bound_cirelson,bound_max;
/// bound columns are on the correlation-form scale.
std::string render_csv(const SweepResult &sweep);
std::string render_json(const SweepResult &sweep);

} // namespace ghzbell
