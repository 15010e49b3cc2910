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

#include "ghzbell/postselect.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ghzbell {

namespace {

constexpr std::size_t num_locations = 3;
constexpr std::size_t num_patterns = 8;

// Per outcome pattern: the statistic contributed and whether the pattern
// passes the strategy's selection. Tied (i,j) choices are already averaged
// into `value`.
struct PatternStat {
    double value;
    bool accepted;
};

using StatTable = std::array<PatternStat, num_patterns>;

int sign_at(std::size_t pattern, std::size_t location) {
    return outcome_sign(pattern, location, num_locations);
}

void require_three_locations(const MeasurementSetting &setting) {
    if (setting.size() != num_locations) {
        throw std::invalid_argument("setting must cover three locations");
    }
}

void require_one_z(const MeasurementSetting &setting) {
    require_three_locations(setting);
    if (setting.count(Axis::Z) != 1) {
        throw std::invalid_argument("setting must measure Z at exactly one "
                                    "location, got " +
                                    setting.label());
    }
}

// Mean of z_i z_j under OutcomeBased labeling, averaged over the tied (i,j)
// pairs. The pairs in a tie always agree on the product, so the average is
// still +1 or -1: any pair of -1 outcomes gives +1, and a pair mixing the
// lone -1 with a +1 gives -1 for both choices.
double zz_outcome_based_value(std::size_t pattern) {
    const int s0 = sign_at(pattern, 0);
    const int s1 = sign_at(pattern, 1);
    const int s2 = sign_at(pattern, 2);
    const int minus = (s0 < 0) + (s1 < 0) + (s2 < 0);
    switch (minus) {
    case 0:
    case 3:
        // All pairs agree: (+1)(+1) or (-1)(-1).
        return 1.0;
    case 2: {
        // The two -1 locations are i and j.
        return 1.0;
    }
    default: {
        // Exactly one -1: both maximal pairs couple it with a +1.
        return -1.0;
    }
    }
}

StatTable zz_table(const MeasurementSetting &setting,
                   const LabelingStrategy &strategy) {
    require_three_locations(setting);
    if (setting.label() != "ZZZ") {
        throw std::invalid_argument("corr_zz requires the ZZZ setting, got " +
                                    setting.label());
    }
    StatTable table;
    for (std::size_t pattern = 0; pattern < num_patterns; ++pattern) {
        if (strategy.kind() == LabelingKind::kOutcomeBased) {
            table[pattern] = {zz_outcome_based_value(pattern), true};
        } else {
            const std::size_t k = strategy.k_location();
            const bool keep =
                sign_at(pattern, k) == strategy.required_z();
            double product = 1.0;
            for (std::size_t q = 0; q < num_locations; ++q) {
                if (q != k) {
                    product *= sign_at(pattern, q);
                }
            }
            table[pattern] = {product, keep};
        }
    }
    return table;
}

StatTable triple_product_table(const MeasurementSetting &setting,
                               const LabelingStrategy &strategy) {
    require_one_z(setting);
    StatTable table;
    for (std::size_t pattern = 0; pattern < num_patterns; ++pattern) {
        const double product = sign_at(pattern, 0) * sign_at(pattern, 1) *
                               sign_at(pattern, 2);
        bool keep = true;
        if (strategy.kind() == LabelingKind::kLocationFixed &&
            setting.axis(strategy.k_location()) == Axis::Z) {
            keep = sign_at(pattern, strategy.k_location()) ==
                   strategy.required_z();
        }
        table[pattern] = {product, keep};
    }
    return table;
}

StatTable xx_postselected_table(const MeasurementSetting &setting,
                                const LabelingStrategy &strategy) {
    require_one_z(setting);
    const std::size_t z_location = *setting.unique_location(Axis::Z);
    if (strategy.kind() == LabelingKind::kLocationFixed &&
        strategy.k_location() != z_location) {
        throw std::invalid_argument(
            "LocationFixed k_location must be the Z-measured location (" +
            std::to_string(z_location) + ") for setting " + setting.label());
    }
    StatTable table;
    for (std::size_t pattern = 0; pattern < num_patterns; ++pattern) {
        double product = 1.0;
        for (std::size_t q = 0; q < num_locations; ++q) {
            if (q != z_location) {
                product *= sign_at(pattern, q);
            }
        }
        const bool keep = sign_at(pattern, z_location) == +1;
        table[pattern] = {product, keep};
    }
    return table;
}

std::array<std::uint64_t, num_patterns>
tally_events(std::span<const OutcomeEvent> events,
             const MeasurementSetting &setting) {
    const std::string label = setting.label();
    std::array<std::uint64_t, num_patterns> counts{};
    for (const OutcomeEvent &event : events) {
        if (event.setting_label != label) {
            throw std::invalid_argument("event recorded under setting " +
                                        event.setting_label +
                                        ", expected " + label);
        }
        const std::array<int, 3> outcomes{event.outcome(0), event.outcome(1),
                                          event.outcome(2)};
        counts[outcome_index(outcomes)] += 1;
    }
    return counts;
}

CorrelationEstimate estimate_from_counts(const StatTable &table,
                                         std::span<const std::uint64_t> counts) {
    if (counts.size() != num_patterns) {
        throw std::invalid_argument("count table must have eight entries");
    }
    std::uint64_t used = 0;
    double sum = 0.0;
    for (std::size_t pattern = 0; pattern < num_patterns; ++pattern) {
        if (!table[pattern].accepted) {
            continue;
        }
        used += counts[pattern];
        sum += static_cast<double>(counts[pattern]) * table[pattern].value;
    }
    if (used == 0) {
        throw std::runtime_error(
            "no events pass the labeling strategy's selection");
    }
    const double mean = sum / static_cast<double>(used);
    double standard_error = std::numeric_limits<double>::quiet_NaN();
    if (used >= 2) {
        double ss = 0.0;
        for (std::size_t pattern = 0; pattern < num_patterns; ++pattern) {
            if (!table[pattern].accepted || counts[pattern] == 0) {
                continue;
            }
            const double d = table[pattern].value - mean;
            ss += static_cast<double>(counts[pattern]) * d * d;
        }
        const double variance = ss / static_cast<double>(used - 1);
        standard_error =
            std::sqrt(variance / static_cast<double>(used));
    }
    return {mean, static_cast<std::size_t>(used), standard_error};
}

double exact_from_distribution(const StatTable &table,
                               const OutcomeDistribution &distribution) {
    double kept = 0.0;
    double sum = 0.0;
    for (std::size_t pattern = 0; pattern < num_patterns; ++pattern) {
        if (!table[pattern].accepted) {
            continue;
        }
        kept += distribution.probability(pattern);
        sum += distribution.probability(pattern) * table[pattern].value;
    }
    if (kept <= 0.0) {
        throw std::runtime_error(
            "the distribution puts zero weight on accepted outcomes");
    }
    return sum / kept;
}

} // namespace

LabelingStrategy LabelingStrategy::outcome_based() {
    return LabelingStrategy(LabelingKind::kOutcomeBased, 0, +1);
}

LabelingStrategy LabelingStrategy::location_fixed(std::size_t k_location,
                                                  int required_z) {
    if (k_location >= num_locations) {
        throw std::invalid_argument("k_location must be 0, 1, or 2");
    }
    if (required_z != +1) {
        throw std::invalid_argument(
            "selection is defined for Z outcome +1 only");
    }
    return LabelingStrategy(LabelingKind::kLocationFixed, k_location,
                            required_z);
}

std::size_t LabelingStrategy::k_location() const {
    if (kind_ != LabelingKind::kLocationFixed) {
        throw std::logic_error(
            "k_location is only defined for the LocationFixed strategy");
    }
    return k_location_;
}

RoleAssignment label_event(const OutcomeEvent &event,
                           const LabelingStrategy &strategy) {
    const MeasurementSetting setting =
        MeasurementSetting::parse(event.setting_label);
    require_three_locations(setting);
    for (std::size_t q = 0; q < num_locations; ++q) {
        if (event.outcome(q) != 1 && event.outcome(q) != -1) {
            throw std::invalid_argument("event outcomes must be +1 or -1");
        }
    }

    if (strategy.kind() == LabelingKind::kLocationFixed) {
        const std::size_t k = strategy.k_location();
        const std::size_t i = (k == 0) ? 1 : 0;
        const std::size_t j = (k == 2) ? 1 : 2;
        const bool accepted = setting.axis(k) != Axis::Z ||
                              event.outcome(k) == strategy.required_z();
        return {i, j, k, accepted, false};
    }

    const std::size_t z_count = setting.count(Axis::Z);
    if (z_count == num_locations) {
        std::array<bool, num_locations> minus{};
        std::size_t minus_count = 0;
        for (std::size_t q = 0; q < num_locations; ++q) {
            minus[q] = event.outcome(q) == -1;
            minus_count += minus[q] ? 1 : 0;
        }
        if (minus_count == 2) {
            std::size_t k = 0;
            while (minus[k]) {
                ++k;
            }
            const std::size_t i = (k == 0) ? 1 : 0;
            const std::size_t j = (k == 2) ? 1 : 2;
            return {i, j, k, true, false};
        }
        if (minus_count == 1) {
            // Both pairs through the lone -1 tie; take the smaller partner.
            std::size_t m = 0;
            while (!minus[m]) {
                ++m;
            }
            const std::size_t partner = (m == 0) ? 1 : 0;
            const std::size_t i = std::min(m, partner);
            const std::size_t j = std::max(m, partner);
            return {i, j, 3 - i - j, true, true};
        }
        // All equal (0 or 3 minus): any pair works.
        return {0, 1, 2, true, true};
    }
    if (z_count == 1) {
        const std::size_t z = *setting.unique_location(Axis::Z);
        const std::size_t j = (z == 0) ? 1 : 0;
        const std::size_t k = (z == 2) ? 1 : 2;
        return {z, j, k, true, true};
    }
    throw std::invalid_argument(
        "outcome-based labeling is defined for ZZZ and one-Z settings, got " +
        setting.label());
}

CorrelationEstimate corr_zz(std::span<const OutcomeEvent> events,
                            const LabelingStrategy &strategy) {
    const MeasurementSetting setting = MeasurementSetting::parse("ZZZ");
    const auto counts = tally_events(events, setting);
    return estimate_from_counts(zz_table(setting, strategy), counts);
}

CorrelationEstimate corr_zz(const MeasurementSetting &setting,
                            std::span<const std::uint64_t> counts,
                            const LabelingStrategy &strategy) {
    return estimate_from_counts(zz_table(setting, strategy), counts);
}

double corr_zz(const OutcomeDistribution &distribution,
               const LabelingStrategy &strategy) {
    return exact_from_distribution(
        zz_table(distribution.setting(), strategy), distribution);
}

CorrelationEstimate corr_zxx_product(std::span<const OutcomeEvent> events,
                                     const LabelingStrategy &strategy) {
    if (events.empty()) {
        throw std::runtime_error("no events supplied");
    }
    const MeasurementSetting setting =
        MeasurementSetting::parse(events.front().setting_label);
    const auto counts = tally_events(events, setting);
    return estimate_from_counts(triple_product_table(setting, strategy),
                                counts);
}

CorrelationEstimate corr_zxx_product(const MeasurementSetting &setting,
                                     std::span<const std::uint64_t> counts,
                                     const LabelingStrategy &strategy) {
    return estimate_from_counts(triple_product_table(setting, strategy),
                                counts);
}

double corr_zxx_product(const OutcomeDistribution &distribution,
                        const LabelingStrategy &strategy) {
    return exact_from_distribution(
        triple_product_table(distribution.setting(), strategy), distribution);
}

CorrelationEstimate corr_xx_postselected(std::span<const OutcomeEvent> events,
                                         const LabelingStrategy &strategy) {
    if (events.empty()) {
        throw std::runtime_error("no events supplied");
    }
    const MeasurementSetting setting =
        MeasurementSetting::parse(events.front().setting_label);
    const auto counts = tally_events(events, setting);
    return estimate_from_counts(xx_postselected_table(setting, strategy),
                                counts);
}

CorrelationEstimate corr_xx_postselected(const MeasurementSetting &setting,
                                         std::span<const std::uint64_t> counts,
                                         const LabelingStrategy &strategy) {
    return estimate_from_counts(xx_postselected_table(setting, strategy),
                                counts);
}

double corr_xx_postselected(const OutcomeDistribution &distribution,
                            const LabelingStrategy &strategy) {
    return exact_from_distribution(
        xx_postselected_table(distribution.setting(), strategy), distribution);
}

} // namespace ghzbell
