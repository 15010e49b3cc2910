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
 * Event labeling and postselected correlation estimators.
 *
 * Each three-qubit coincidence is assigned roles i, j, k: the pair (i, j)
 * carries the two-party correlation and k is the labeling qubit. Two
 * strategies are supported. OutcomeBased derives the roles from the observed
 * outcomes (on ZZZ events, k is the location that answered +1 when exactly
 * two answered -1). LocationFixed pins k to a configured location and keeps
 * only events where that location's Z result is +1.
 *
 * Estimators come in three forms per quantity: over recorded event lists
 * (with standard errors), over per-pattern count tables, and over exact
 * outcome distributions (expectation values, no sampling error).
 */

#pragma once

#include <cstdint>
#include <span>

#include "ghzbell/measurement.hpp"

namespace ghzbell {

enum class LabelingKind { kOutcomeBased, kLocationFixed };

/**
 * How events are assigned their i, j, k roles and which events are kept.
 */
class LabelingStrategy {
  public:
    static LabelingStrategy outcome_based();
    /// Pins role k to a location; only events with Z outcome +1 there are
    /// kept (when that location is measured along Z). Selection on -1 is not
    /// part of the protocol and is rejected.
    static LabelingStrategy location_fixed(std::size_t k_location,
                                           int required_z = +1);

    LabelingKind kind() const { return kind_; }
    /// LocationFixed only.
    std::size_t k_location() const;
    int required_z() const { return required_z_; }

  private:
    LabelingStrategy(LabelingKind kind, std::size_t k_location, int required_z)
        : kind_(kind), k_location_(k_location), required_z_(required_z) {}

    LabelingKind kind_;
    std::size_t k_location_;
    int required_z_;
};

/**
 * Roles for one event. When `symmetrized` is set, several (i, j) choices were
 * equally valid (all-equal ZZZ outcomes, noise-only outcome classes, or the
 * interchangeable pair of X locations) and the lexicographically smallest
 * assignment is reported; estimators average over the tied choices, so they
 * never depend on this canonicalization.
 */
struct RoleAssignment {
    std::size_t i_location;
    std::size_t j_location;
    std::size_t k_location;
    bool accepted;
    bool symmetrized;
};

/**
 * A postselected sample mean. `standard_error` is the sample standard
 * deviation of the per-event statistic divided by sqrt(num_events_used);
 * it is NaN when fewer than two events were used.
 */
struct CorrelationEstimate {
    double value;
    std::size_t num_events_used;
    double standard_error;
};

/**
 * Assigns roles to a single event.
 *
 * @throws std::invalid_argument for setting/strategy combinations with no
 *         defined rule (OutcomeBased needs the ZZZ setting or exactly one Z)
 */
RoleAssignment label_event(const OutcomeEvent &event,
                           const LabelingStrategy &strategy);

/**
 * Mean of z_i * z_j over accepted ZZZ events.
 *
 * @throws std::invalid_argument on a non-ZZZ event
 * @throws std::runtime_error when no event is accepted
 */
CorrelationEstimate corr_zz(std::span<const OutcomeEvent> events,
                            const LabelingStrategy &strategy);
CorrelationEstimate corr_zz(const MeasurementSetting &setting,
                            std::span<const std::uint64_t> counts,
                            const LabelingStrategy &strategy);
/// Exact expectation under an outcome distribution.
double corr_zz(const OutcomeDistribution &distribution,
               const LabelingStrategy &strategy);

/**
 * Mean of the full triple product z * x * x over events of a one-Z setting
 * (ZXX or XZX). No postselection is applied under OutcomeBased; this is the
 * operational form of the labeled two-party correlation, and it evaluates to
 * -1 on every ideal event.
 *
 * @throws std::invalid_argument unless the setting has exactly one Z
 * @throws std::runtime_error when no event is accepted
 */
CorrelationEstimate corr_zxx_product(std::span<const OutcomeEvent> events,
                                     const LabelingStrategy &strategy);
CorrelationEstimate corr_zxx_product(const MeasurementSetting &setting,
                                     std::span<const std::uint64_t> counts,
                                     const LabelingStrategy &strategy);
double corr_zxx_product(const OutcomeDistribution &distribution,
                        const LabelingStrategy &strategy);

/**
 * Mean of x_i * x_j over events of a one-Z setting (XXZ in the standard
 * run plan) whose Z outcome is +1; events with Z outcome -1 are discarded.
 * The Z location acts as k here. A LocationFixed strategy must agree with
 * that location.
 *
 * @throws std::invalid_argument on setting shape or strategy mismatch
 * @throws std::runtime_error when no event is accepted
 */
CorrelationEstimate corr_xx_postselected(std::span<const OutcomeEvent> events,
                                         const LabelingStrategy &strategy);
CorrelationEstimate corr_xx_postselected(const MeasurementSetting &setting,
                                         std::span<const std::uint64_t> counts,
                                         const LabelingStrategy &strategy);
double corr_xx_postselected(const OutcomeDistribution &distribution,
                            const LabelingStrategy &strategy);

} // namespace ghzbell
