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
 * Exact Born-rule joint outcome distributions for per-qubit Pauli-axis
 * measurements, and reproducible Monte Carlo sampling of coincidence events.
 *
 * Reproducibility contract: sampling uses std::mt19937_64 (whose output
 * sequence is fixed by the C++ standard) with uniforms formed from the top
 * 53 bits, u = (x >> 11) * 2^-53, and inverse-CDF lookup over the outcome
 * table in fixed index order. Identical (state, setting, shots, visibility,
 * seed) therefore yields bit-identical event lists on every platform.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghzbell/statevector.hpp"

namespace ghzbell {

/// Measurement axis for one location. Outcomes are the ±1 spin results.
enum class Axis : char { X = 'X', Y = 'Y', Z = 'Z' };

/**
 * Per-location measurement axes for one run type, e.g. "ZXX" = measure Z at
 * location 0 and X at locations 1 and 2.
 */
class MeasurementSetting {
  public:
    explicit MeasurementSetting(std::vector<Axis> axes);

    /// Parses a label such as "ZXX".
    static MeasurementSetting parse(std::string_view label);

    std::size_t size() const { return axes_.size(); }
    Axis axis(std::size_t location) const { return axes_[location]; }
    const std::vector<Axis> &axes() const { return axes_; }
    std::string label() const;

    std::size_t count(Axis a) const;
    /// Location of the unique occurrence of `a`, if there is exactly one.
    std::optional<std::size_t> unique_location(Axis a) const;

  private:
    std::vector<Axis> axes_;
};

/**
 * Outcome triples are indexed by packing one bit per location, location 0
 * most significant, with bit 0 <-> outcome +1 and bit 1 <-> outcome -1.
 */
std::size_t outcome_index(std::span<const int> outcomes);
int outcome_sign(std::size_t index, std::size_t location, std::size_t n);

/**
 * Exact joint distribution over the 2^n outcome patterns of one setting.
 */
class OutcomeDistribution {
  public:
    OutcomeDistribution(MeasurementSetting setting,
                        std::vector<double> probabilities);

    const MeasurementSetting &setting() const { return setting_; }
    const std::vector<double> &probabilities() const { return probabilities_; }
    double probability(std::size_t index) const { return probabilities_[index]; }
    /// Probability of a specific ±1 outcome pattern.
    double probability(std::span<const int> outcomes) const;
    std::size_t num_locations() const { return setting_.size(); }

  private:
    MeasurementSetting setting_;
    std::vector<double> probabilities_;
};

/**
 * One recorded coincidence: the setting it was taken under and the three ±1
 * results, indexed by location.
 */
struct OutcomeEvent {
    std::string setting_label;
    std::array<std::int8_t, 3> outcomes;

    int outcome(std::size_t location) const { return outcomes[location]; }
};

/**
 * Born-rule distribution of measuring each qubit along its axis, mixed with
 * uniform outcome noise:
 *
 *   D(V) = V * D_Born + (1 - V) * Uniform(2^n).
 *
 * Probabilities below 1e-15 are clamped to zero and the table renormalized,
 * so outcomes that are impossible at V=1 can never be sampled.
 *
 * @throws std::invalid_argument on length mismatch or visibility outside [0,1]
 */
OutcomeDistribution joint_distribution(const StateVector &state,
                                       const MeasurementSetting &setting,
                                       double visibility = 1.0);

/**
 * Draws `shots` i.i.d. events from joint_distribution. Three-qubit states
 * only (events are triples). See the file header for the PRNG contract.
 *
 * @throws std::invalid_argument if shots == 0 or the state is not 3 qubits
 */
std::vector<OutcomeEvent> sample(const StateVector &state,
                                 const MeasurementSetting &setting,
                                 std::size_t shots, double visibility,
                                 std::uint64_t seed);

/**
 * Partitioned sampling: shots are split as evenly as possible over
 * `partitions` independent streams, stream p seeded with base_seed + p, and
 * the per-stream event lists concatenated in partition order. The result for
 * k partitions differs from the single-stream result but is itself fully
 * reproducible. Partitions run concurrently.
 */
std::vector<OutcomeEvent> sample_partitioned(const StateVector &state,
                                             const MeasurementSetting &setting,
                                             std::size_t shots,
                                             double visibility,
                                             std::uint64_t base_seed,
                                             std::size_t partitions);

} // namespace ghzbell
