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

#include "ghzbell/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ghzbell {

namespace {

// Probabilities smaller than this are treated as exact zeros so that
// amplitudes which vanish analytically cannot resurface through rounding.
constexpr double prob_floor = 1e-15;
constexpr double sum_tol = 1e-12;

constexpr std::size_t qubit_mask(std::size_t n, std::size_t q) {
    return std::size_t{1} << (n - 1 - q);
}

Axis axis_from_char(char c) {
    switch (c) {
    case 'X':
        return Axis::X;
    case 'Y':
        return Axis::Y;
    case 'Z':
        return Axis::Z;
    default:
        throw std::invalid_argument("measurement axis must be one of X, Y, Z");
    }
}

// Rotates `state` so that measuring every qubit in the computational basis
// realizes the requested axes: X applies H, Y applies H S^dagger, Z nothing.
// After rotation, basis bit 1 at a location means outcome -1 there.
std::vector<complex_t> rotated_amplitudes(const StateVector &state,
                                          const MeasurementSetting &setting) {
    const std::size_t n = state.num_qubits();
    std::vector<complex_t> amps(state.amplitudes().begin(),
                                state.amplitudes().end());
    constexpr double inv_sqrt2 = 0.7071067811865475244008443621048490;
    for (std::size_t q = 0; q < n; ++q) {
        const Axis axis = setting.axis(q);
        if (axis == Axis::Z) {
            continue;
        }
        const std::size_t mask = qubit_mask(n, q);
        for (std::size_t b = 0; b < amps.size(); ++b) {
            if (b & mask) {
                continue;
            }
            const complex_t a0 = amps[b];
            const complex_t a1 = amps[b | mask];
            if (axis == Axis::X) {
                amps[b] = inv_sqrt2 * (a0 + a1);
                amps[b | mask] = inv_sqrt2 * (a0 - a1);
            } else {
                // Y basis: |+i> = (|0> + i|1>)/sqrt(2) maps to outcome +1,
                // so project with its conjugate row ( <+i| = (<0| - i<1|)/sqrt2 ).
                const complex_t ni{0.0, -1.0};
                amps[b] = inv_sqrt2 * (a0 + ni * a1);
                amps[b | mask] = inv_sqrt2 * (a0 - ni * a1);
            }
        }
    }
    return amps;
}

std::vector<double> clamp_and_normalize(std::vector<double> probs) {
    for (double &p : probs) {
        if (p < prob_floor) {
            p = 0.0;
        }
    }
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (std::abs(total - 1.0) > sum_tol) {
        throw std::logic_error("outcome probabilities do not sum to one");
    }
    for (double &p : probs) {
        p /= total;
    }
    return probs;
}

// Top-53-bit uniform in [0, 1). Fixed here as part of the format: changing
// this mapping would silently change every seeded dataset.
double uniform53(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<OutcomeEvent> sample_stream(const OutcomeDistribution &dist,
                                        std::size_t shots,
                                        std::uint64_t seed) {
    std::vector<double> cdf(dist.probabilities().size());
    std::partial_sum(dist.probabilities().begin(), dist.probabilities().end(),
                     cdf.begin());
    cdf.back() = 1.0;

    const std::string label = dist.setting().label();
    const std::size_t n = dist.num_locations();
    std::mt19937_64 rng(seed);
    std::vector<OutcomeEvent> events;
    events.reserve(shots);
    for (std::size_t s = 0; s < shots; ++s) {
        const double u = uniform53(rng);
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t index =
            std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
        OutcomeEvent event;
        event.setting_label = label;
        for (std::size_t q = 0; q < n; ++q) {
            event.outcomes[q] =
                static_cast<std::int8_t>(outcome_sign(index, q, n));
        }
        events.push_back(std::move(event));
    }
    return events;
}

} // namespace

MeasurementSetting::MeasurementSetting(std::vector<Axis> axes)
    : axes_(std::move(axes)) {
    if (axes_.empty()) {
        throw std::invalid_argument("measurement setting must not be empty");
    }
}

MeasurementSetting MeasurementSetting::parse(std::string_view label) {
    std::vector<Axis> axes;
    axes.reserve(label.size());
    for (char c : label) {
        axes.push_back(axis_from_char(c));
    }
    return MeasurementSetting(std::move(axes));
}

std::string MeasurementSetting::label() const {
    std::string out;
    out.reserve(axes_.size());
    for (Axis a : axes_) {
        out.push_back(static_cast<char>(a));
    }
    return out;
}

std::size_t MeasurementSetting::count(Axis a) const {
    return static_cast<std::size_t>(std::count(axes_.begin(), axes_.end(), a));
}

std::optional<std::size_t> MeasurementSetting::unique_location(Axis a) const {
    if (count(a) != 1) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(
        std::find(axes_.begin(), axes_.end(), a) - axes_.begin());
}

std::size_t outcome_index(std::span<const int> outcomes) {
    std::size_t index = 0;
    for (int o : outcomes) {
        if (o != 1 && o != -1) {
            throw std::invalid_argument("outcomes must be +1 or -1");
        }
        index = (index << 1) | (o == -1 ? 1 : 0);
    }
    return index;
}

int outcome_sign(std::size_t index, std::size_t location, std::size_t n) {
    return (index >> (n - 1 - location)) & 1 ? -1 : 1;
}

OutcomeDistribution::OutcomeDistribution(MeasurementSetting setting,
                                         std::vector<double> probabilities)
    : setting_(std::move(setting)), probabilities_(std::move(probabilities)) {
    if (probabilities_.size() != (std::size_t{1} << setting_.size())) {
        throw std::invalid_argument(
            "probability table size must be 2^(setting size)");
    }
}

double OutcomeDistribution::probability(std::span<const int> outcomes) const {
    if (outcomes.size() != setting_.size()) {
        throw std::invalid_argument("outcome pattern length mismatch");
    }
    return probabilities_[outcome_index(outcomes)];
}

OutcomeDistribution joint_distribution(const StateVector &state,
                                       const MeasurementSetting &setting,
                                       double visibility) {
    if (setting.size() != state.num_qubits()) {
        throw std::invalid_argument(
            "setting size must match the number of qubits");
    }
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw std::invalid_argument("visibility must lie in [0, 1]");
    }
    const std::vector<complex_t> amps = rotated_amplitudes(state, setting);
    const double uniform = 1.0 / static_cast<double>(amps.size());
    std::vector<double> probs(amps.size());
    for (std::size_t b = 0; b < amps.size(); ++b) {
        probs[b] = visibility * std::norm(amps[b]) +
                   (1.0 - visibility) * uniform;
    }
    return OutcomeDistribution(setting, clamp_and_normalize(std::move(probs)));
}

std::vector<OutcomeEvent> sample(const StateVector &state,
                                 const MeasurementSetting &setting,
                                 std::size_t shots, double visibility,
                                 std::uint64_t seed) {
    if (state.num_qubits() != 3) {
        throw std::invalid_argument("sampling requires a three-qubit state");
    }
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    return sample_stream(joint_distribution(state, setting, visibility), shots,
                         seed);
}

std::vector<OutcomeEvent> sample_partitioned(const StateVector &state,
                                             const MeasurementSetting &setting,
                                             std::size_t shots,
                                             double visibility,
                                             std::uint64_t base_seed,
                                             std::size_t partitions) {
    if (partitions == 0) {
        throw std::invalid_argument("partitions must be positive");
    }
    if (state.num_qubits() != 3) {
        throw std::invalid_argument("sampling requires a three-qubit state");
    }
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    const OutcomeDistribution dist =
        joint_distribution(state, setting, visibility);

    const std::size_t base = shots / partitions;
    const std::size_t extra = shots % partitions;
    std::vector<std::future<std::vector<OutcomeEvent>>> futures;
    futures.reserve(partitions);
    for (std::size_t p = 0; p < partitions; ++p) {
        const std::size_t count = base + (p < extra ? 1 : 0);
        futures.push_back(std::async(std::launch::async, [&dist, count,
                                                          base_seed, p] {
            return sample_stream(dist, count, base_seed + p);
        }));
    }
    std::vector<OutcomeEvent> events;
    events.reserve(shots);
    for (auto &f : futures) {
        std::vector<OutcomeEvent> part = f.get();
        events.insert(events.end(), part.begin(), part.end());
    }
    return events;
}

} // namespace ghzbell
