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
 * Coincidence-count tables and the reconstruction of the four probability
 * terms of the CH-form inequality from triple-coincidence frequencies.
 *
 * Counts travel in a plain-text format, one record per line:
 *
 *     SETTING a b c count
 *
 * where SETTING is a three-axis label such as ZXX, the outcomes a b c are
 * -1 or 1 ordered by location, and count is a nonnegative integer. Blank
 * lines are skipped and `#` starts a comment. Records for the same pattern
 * accumulate. save_counts emits settings sorted by label with all eight
 * pattern lines each, so equal tables serialize to identical bytes.
 *
 * Probabilities are estimated as raw relative frequencies, never smoothed:
 * the two-party patterns of interest are sums of three-party pattern
 * frequencies, and several of them vanish exactly in the ideal state.
 */

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "ghzbell/measurement.hpp"

namespace ghzbell {

/**
 * Per-setting tallies of three-fold coincidences, indexed by outcome
 * pattern. total_shots of a setting is the sum of its eight counts.
 */
class CoincidenceTable {
  public:
    using PatternCounts = std::array<std::uint64_t, 8>;

    CoincidenceTable() = default;

    static CoincidenceTable from_events(std::span<const OutcomeEvent> events);

    void add(std::string_view setting_label, std::span<const int> outcomes,
             std::uint64_t count);
    void add_events(std::span<const OutcomeEvent> events);

    bool has_setting(std::string_view label) const;
    /// @throws std::runtime_error for a label not in the table
    const PatternCounts &counts(std::string_view label) const;
    std::uint64_t count(std::string_view label,
                        std::span<const int> outcomes) const;
    std::uint64_t total_shots(std::string_view label) const;
    /// Relative frequency count/total_shots.
    /// @throws std::runtime_error when the setting has zero shots
    double frequency(std::string_view label,
                     std::span<const int> outcomes) const;
    /// Labels present, sorted.
    std::vector<std::string> setting_labels() const;

    bool operator==(const CoincidenceTable &) const = default;

  private:
    std::map<std::string, PatternCounts, std::less<>> settings_;
};

/**
 * Estimated probability that both labeled qubits answer -1 in the all-Z
 * setting: the sum of the ZZZ pattern frequencies with at least two -1
 * results, (1,-1,-1) + (-1,1,-1) + (-1,-1,1) + (-1,-1,-1).
 *
 * @throws std::runtime_error when ZZZ is missing or has zero shots
 */
double reconstruct_p_zz(const CoincidenceTable &table);
/// Exact counterpart over the ZZZ outcome distribution.
double reconstruct_p_zz(const OutcomeDistribution &zzz);

/**
 * Common upper bound for the two mixed-setting probabilities: the sum of
 * the six pattern frequencies, two from each one-Z setting, where the Z
 * result is -1 and the two X results differ.
 *
 * @throws std::runtime_error when ZXX, XZX, or XXZ is missing or empty
 */
double six_term_bound(const CoincidenceTable &table);
double six_term_bound(const OutcomeDistribution &zxx,
                      const OutcomeDistribution &xzx,
                      const OutcomeDistribution &xxz);

/**
 * Per-setting estimate of one mixed-setting probability: the Z-location
 * result is -1 while the two X-location results differ.
 *
 * @throws std::invalid_argument unless the setting has exactly one Z axis
 */
double per_setting_p_zx(const CoincidenceTable &table,
                        std::string_view setting_label);
double per_setting_p_zx(const OutcomeDistribution &one_z);

/**
 * Estimated probability that the all-X results are unanimous:
 * frequency of (1,1,1) plus frequency of (-1,-1,-1) under XXX.
 *
 * @throws std::runtime_error when XXX is missing or has zero shots
 */
double reconstruct_p_xx(const CoincidenceTable &table);
double reconstruct_p_xx(const OutcomeDistribution &xxx);

/// How the two mixed-setting probabilities were obtained.
enum class PZXSource { kPerSetting, kSixTermBound };

/// The four probability terms of the CH form.
struct CHProbabilities {
    double p_zz;
    double p_zx;
    double p_xz;
    double p_xx;
    PZXSource zx_xz_source;
};

/**
 * Assembles all four CH terms from a table. With kPerSetting, p_zx and
 * p_xz come from ZXX and XZX respectively; with kSixTermBound, both are
 * replaced by the shared six-term upper bound (which can only lower the
 * CH value, keeping the bound conservative).
 */
CHProbabilities ch_probabilities(const CoincidenceTable &table,
                                 PZXSource source = PZXSource::kPerSetting);

/**
 * Parses a counts file.
 *
 * @throws std::runtime_error naming the line and field on malformed input
 */
CoincidenceTable load_counts(std::istream &in);
CoincidenceTable load_counts(const std::filesystem::path &path);

void save_counts(const CoincidenceTable &table, std::ostream &out);
void save_counts(const CoincidenceTable &table,
                 const std::filesystem::path &path);

} // namespace ghzbell
