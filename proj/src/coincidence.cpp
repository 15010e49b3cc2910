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

#include "ghzbell/coincidence.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ghzbell {

namespace {

constexpr std::size_t num_patterns = 8;

// The two-party patterns are sums over three-party patterns selected by
// simple predicates on the per-location signs; evaluating those predicates
// over a frequency table is shared by the count-based and exact paths.
using Frequencies = std::array<double, num_patterns>;

int sign_at(std::size_t pattern, std::size_t location) {
    return outcome_sign(pattern, location, 3);
}

double p_zz_from(const Frequencies &f) {
    double sum = 0.0;
    for (std::size_t pattern = 0; pattern < num_patterns; ++pattern) {
        const int minus = (sign_at(pattern, 0) < 0) +
                          (sign_at(pattern, 1) < 0) +
                          (sign_at(pattern, 2) < 0);
        if (minus >= 2) {
            sum += f[pattern];
        }
    }
    return sum;
}

double p_zx_from(const Frequencies &f, std::size_t z_location) {
    double sum = 0.0;
    for (std::size_t pattern = 0; pattern < num_patterns; ++pattern) {
        if (sign_at(pattern, z_location) != -1) {
            continue;
        }
        int x_product = 1;
        for (std::size_t q = 0; q < 3; ++q) {
            if (q != z_location) {
                x_product *= sign_at(pattern, q);
            }
        }
        if (x_product == -1) {
            sum += f[pattern];
        }
    }
    return sum;
}

double p_xx_from(const Frequencies &f) {
    const std::array<int, 3> all_plus{1, 1, 1};
    const std::array<int, 3> all_minus{-1, -1, -1};
    return f[outcome_index(all_plus)] + f[outcome_index(all_minus)];
}

std::size_t z_location_of(const MeasurementSetting &setting) {
    const auto location = setting.unique_location(Axis::Z);
    if (setting.size() != 3 || !location) {
        throw std::invalid_argument("setting " + setting.label() +
                                    " must measure Z at exactly one of "
                                    "three locations");
    }
    return *location;
}

Frequencies table_frequencies(const CoincidenceTable &table,
                              std::string_view label) {
    const CoincidenceTable::PatternCounts &counts = table.counts(label);
    const std::uint64_t total =
        std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (total == 0) {
        throw std::runtime_error("setting " + std::string(label) +
                                 " has zero recorded shots");
    }
    Frequencies f;
    for (std::size_t pattern = 0; pattern < num_patterns; ++pattern) {
        f[pattern] = static_cast<double>(counts[pattern]) /
                     static_cast<double>(total);
    }
    return f;
}

Frequencies distribution_frequencies(const OutcomeDistribution &distribution,
                                     std::string_view expected_label) {
    if (distribution.num_locations() != 3) {
        throw std::invalid_argument("distribution must cover three locations");
    }
    if (!expected_label.empty() &&
        distribution.setting().label() != expected_label) {
        throw std::invalid_argument(
            "expected the " + std::string(expected_label) +
            " distribution, got " + distribution.setting().label());
    }
    Frequencies f;
    for (std::size_t pattern = 0; pattern < num_patterns; ++pattern) {
        f[pattern] = distribution.probability(pattern);
    }
    return f;
}

std::array<int, 3> parse_outcome_fields(const std::array<std::string, 3> &raw,
                                        std::size_t line_number) {
    std::array<int, 3> outcomes{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (raw[i] == "1" || raw[i] == "+1") {
            outcomes[i] = 1;
        } else if (raw[i] == "-1") {
            outcomes[i] = -1;
        } else {
            throw std::runtime_error(
                "line " + std::to_string(line_number) + ": outcome field " +
                std::to_string(i + 1) + " must be -1 or 1, got '" + raw[i] +
                "'");
        }
    }
    return outcomes;
}

} // namespace

CoincidenceTable
CoincidenceTable::from_events(std::span<const OutcomeEvent> events) {
    CoincidenceTable table;
    table.add_events(events);
    return table;
}

void CoincidenceTable::add(std::string_view setting_label,
                           std::span<const int> outcomes,
                           std::uint64_t count) {
    const MeasurementSetting setting = MeasurementSetting::parse(setting_label);
    if (setting.size() != 3 || outcomes.size() != 3) {
        throw std::invalid_argument(
            "coincidence records are three-location triples");
    }
    auto [it, inserted] =
        settings_.try_emplace(std::string(setting_label), PatternCounts{});
    it->second[outcome_index(outcomes)] += count;
}

void CoincidenceTable::add_events(std::span<const OutcomeEvent> events) {
    for (const OutcomeEvent &event : events) {
        const std::array<int, 3> outcomes{event.outcome(0), event.outcome(1),
                                          event.outcome(2)};
        add(event.setting_label, outcomes, 1);
    }
}

bool CoincidenceTable::has_setting(std::string_view label) const {
    return settings_.find(label) != settings_.end();
}

const CoincidenceTable::PatternCounts &
CoincidenceTable::counts(std::string_view label) const {
    const auto it = settings_.find(label);
    if (it == settings_.end()) {
        throw std::runtime_error("no counts recorded for setting " +
                                 std::string(label));
    }
    return it->second;
}

std::uint64_t CoincidenceTable::count(std::string_view label,
                                      std::span<const int> outcomes) const {
    return counts(label)[outcome_index(outcomes)];
}

std::uint64_t CoincidenceTable::total_shots(std::string_view label) const {
    const PatternCounts &c = counts(label);
    return std::accumulate(c.begin(), c.end(), std::uint64_t{0});
}

double CoincidenceTable::frequency(std::string_view label,
                                   std::span<const int> outcomes) const {
    const std::uint64_t total = total_shots(label);
    if (total == 0) {
        throw std::runtime_error("setting " + std::string(label) +
                                 " has zero recorded shots");
    }
    return static_cast<double>(count(label, outcomes)) /
           static_cast<double>(total);
}

std::vector<std::string> CoincidenceTable::setting_labels() const {
    std::vector<std::string> labels;
    labels.reserve(settings_.size());
    for (const auto &[label, counts] : settings_) {
        labels.push_back(label);
    }
    return labels;
}

double reconstruct_p_zz(const CoincidenceTable &table) {
    return p_zz_from(table_frequencies(table, "ZZZ"));
}

double reconstruct_p_zz(const OutcomeDistribution &zzz) {
    return p_zz_from(distribution_frequencies(zzz, "ZZZ"));
}

double six_term_bound(const CoincidenceTable &table) {
    return p_zx_from(table_frequencies(table, "ZXX"), 0) +
           p_zx_from(table_frequencies(table, "XZX"), 1) +
           p_zx_from(table_frequencies(table, "XXZ"), 2);
}

double six_term_bound(const OutcomeDistribution &zxx,
                      const OutcomeDistribution &xzx,
                      const OutcomeDistribution &xxz) {
    return p_zx_from(distribution_frequencies(zxx, "ZXX"), 0) +
           p_zx_from(distribution_frequencies(xzx, "XZX"), 1) +
           p_zx_from(distribution_frequencies(xxz, "XXZ"), 2);
}

double per_setting_p_zx(const CoincidenceTable &table,
                        std::string_view setting_label) {
    const MeasurementSetting setting = MeasurementSetting::parse(setting_label);
    const std::size_t z_location = z_location_of(setting);
    return p_zx_from(table_frequencies(table, setting_label), z_location);
}

double per_setting_p_zx(const OutcomeDistribution &one_z) {
    const std::size_t z_location = z_location_of(one_z.setting());
    return p_zx_from(distribution_frequencies(one_z, {}), z_location);
}

double reconstruct_p_xx(const CoincidenceTable &table) {
    return p_xx_from(table_frequencies(table, "XXX"));
}

double reconstruct_p_xx(const OutcomeDistribution &xxx) {
    return p_xx_from(distribution_frequencies(xxx, "XXX"));
}

CHProbabilities ch_probabilities(const CoincidenceTable &table,
                                 PZXSource source) {
    CHProbabilities p{};
    p.p_zz = reconstruct_p_zz(table);
    p.p_xx = reconstruct_p_xx(table);
    p.zx_xz_source = source;
    if (source == PZXSource::kPerSetting) {
        p.p_zx = per_setting_p_zx(table, "ZXX");
        p.p_xz = per_setting_p_zx(table, "XZX");
    } else {
        const double bound = six_term_bound(table);
        p.p_zx = bound;
        p.p_xz = bound;
    }
    return p;
}

CoincidenceTable load_counts(std::istream &in) {
    CoincidenceTable table;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string setting_label;
        if (!(fields >> setting_label)) {
            continue;
        }
        std::array<std::string, 3> raw_outcomes;
        std::string raw_count;
        if (!(fields >> raw_outcomes[0] >> raw_outcomes[1] >>
              raw_outcomes[2] >> raw_count)) {
            throw std::runtime_error(
                "line " + std::to_string(line_number) +
                ": expected 'SETTING a b c count', got '" + line + "'");
        }
        std::string trailing;
        if (fields >> trailing) {
            throw std::runtime_error("line " + std::to_string(line_number) +
                                     ": unexpected trailing field '" +
                                     trailing + "'");
        }

        try {
            MeasurementSetting::parse(setting_label);
        } catch (const std::invalid_argument &error) {
            throw std::runtime_error("line " + std::to_string(line_number) +
                                     ": bad setting label '" + setting_label +
                                     "': " + error.what());
        }
        if (setting_label.size() != 3) {
            throw std::runtime_error("line " + std::to_string(line_number) +
                                     ": setting label must have three axes");
        }
        const std::array<int, 3> outcomes =
            parse_outcome_fields(raw_outcomes, line_number);

        std::uint64_t count = 0;
        try {
            std::size_t consumed = 0;
            if (!raw_count.empty() && raw_count.front() == '-') {
                throw std::invalid_argument("negative");
            }
            count = std::stoull(raw_count, &consumed);
            if (consumed != raw_count.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw std::runtime_error("line " + std::to_string(line_number) +
                                     ": count must be a nonnegative integer, "
                                     "got '" +
                                     raw_count + "'");
        }
        table.add(setting_label, outcomes, count);
    }
    return table;
}

CoincidenceTable load_counts(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open counts file: " + path.string());
    }
    return load_counts(in);
}

void save_counts(const CoincidenceTable &table, std::ostream &out) {
    out << "# setting o1 o2 o3 count\n";
    for (const std::string &label : table.setting_labels()) {
        for (std::size_t pattern = 0; pattern < 8; ++pattern) {
            out << label;
            for (std::size_t q = 0; q < 3; ++q) {
                out << ' ' << sign_at(pattern, q);
            }
            out << ' ' << table.counts(label)[pattern] << '\n';
        }
    }
}

void save_counts(const CoincidenceTable &table,
                 const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open counts file for writing: " +
                                 path.string());
    }
    save_counts(table, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing counts file: " +
                                 path.string());
    }
}

} // namespace ghzbell
