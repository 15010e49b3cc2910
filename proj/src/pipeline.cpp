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

#include "ghzbell/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ghzbell {

namespace {

constexpr CHSHParams standard_signs{1, 1};

struct Distributions {
    OutcomeDistribution zzz;
    OutcomeDistribution zxx;
    OutcomeDistribution xzx;
    OutcomeDistribution xxz;
    OutcomeDistribution xxx;
};

Distributions exact_distributions(double theta, double visibility) {
    const StateVector state = make_weighted_ghz(theta);
    const auto dist = [&](std::string_view label) {
        return joint_distribution(state, MeasurementSetting::parse(label),
                                  visibility);
    };
    return {dist("ZZZ"), dist("ZXX"), dist("XZX"), dist("XXZ"), dist("XXX")};
}

ReportTerm term_from_estimate(const CorrelationEstimate &estimate) {
    ReportTerm term;
    term.value = estimate.value;
    if (std::isfinite(estimate.standard_error)) {
        term.standard_error = estimate.standard_error;
    }
    term.events_used = estimate.num_events_used;
    return term;
}

// Correlation and CH pipelines over a complete count table; shared by the
// sampled and external-counts entry points.
ExperimentReport report_from_table(const CoincidenceTable &table,
                                   const LabelingStrategy &strategy) {
    ExperimentReport report;
    report.strategy = strategy;
    report.c_zz = term_from_estimate(
        corr_zz(MeasurementSetting::parse("ZZZ"), table.counts("ZZZ"),
                strategy));
    report.c_zx = term_from_estimate(
        corr_zxx_product(MeasurementSetting::parse("ZXX"),
                         table.counts("ZXX"), strategy));
    report.c_xz = term_from_estimate(
        corr_zxx_product(MeasurementSetting::parse("XZX"),
                         table.counts("XZX"), strategy));
    report.c_xx = term_from_estimate(
        corr_xx_postselected(MeasurementSetting::parse("XXZ"),
                             table.counts("XXZ"), strategy));
    report.probabilities = ch_probabilities(table, PZXSource::kPerSetting);
    report.six_term = six_term_bound(table);
    report.chsh =
        make_chsh_report(report.c_zz.value, report.c_zx.value,
                         report.c_xz.value, report.c_xx.value, standard_signs);
    report.ch = make_ch_report(report.probabilities.p_zz,
                               report.probabilities.p_zx,
                               report.probabilities.p_xz,
                               report.probabilities.p_xx);
    return report;
}

std::string fmt(double value) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.15g", value);
    return buffer;
}

void append_term_line(std::ostringstream &out, const char *name,
                      const ReportTerm &term) {
    out << "  " << name << " = " << fmt(term.value);
    if (term.events_used) {
        out << "   (";
        if (term.standard_error) {
            out << "se " << fmt(*term.standard_error);
        } else {
            out << "se degenerate";
        }
        out << ", " << *term.events_used << " events)";
    }
    out << '\n';
}

nlohmann::json term_to_json(const ReportTerm &term) {
    nlohmann::json j;
    j["value"] = term.value;
    j["standard_error"] =
        term.standard_error ? nlohmann::json(*term.standard_error)
                            : nlohmann::json(nullptr);
    j["events_used"] = term.events_used ? nlohmann::json(*term.events_used)
                                        : nlohmann::json(nullptr);
    return j;
}

nlohmann::json bounds_to_json(const InequalityReport &report) {
    return {{"lhv", report.lhv_bound},
            {"cirelson", report.cirelson_bound},
            {"max", report.algebraic_max}};
}

} // namespace

ExperimentReport run_exact(const ExperimentConfig &config) {
    const Distributions d =
        exact_distributions(config.theta, config.visibility);
    ExperimentReport report;
    report.mode = ExperimentReport::Mode::kExact;
    report.theta = config.theta;
    report.visibility = config.visibility;
    report.strategy = config.strategy;
    report.c_zz = ReportTerm{corr_zz(d.zzz, config.strategy), {}, {}};
    report.c_zx =
        ReportTerm{corr_zxx_product(d.zxx, config.strategy), {}, {}};
    report.c_xz =
        ReportTerm{corr_zxx_product(d.xzx, config.strategy), {}, {}};
    report.c_xx =
        ReportTerm{corr_xx_postselected(d.xxz, config.strategy), {}, {}};
    report.probabilities =
        CHProbabilities{reconstruct_p_zz(d.zzz), per_setting_p_zx(d.zxx),
                        per_setting_p_zx(d.xzx), reconstruct_p_xx(d.xxx),
                        PZXSource::kPerSetting};
    report.six_term = six_term_bound(d.zxx, d.xzx, d.xxz);
    report.chsh =
        make_chsh_report(report.c_zz.value, report.c_zx.value,
                         report.c_xz.value, report.c_xx.value, standard_signs);
    report.ch = make_ch_report(report.probabilities.p_zz,
                               report.probabilities.p_zx,
                               report.probabilities.p_xz,
                               report.probabilities.p_xx);
    return report;
}

SampledRun run_sampled(const ExperimentConfig &config) {
    const StateVector state = make_weighted_ghz(config.theta);
    CoincidenceTable table;
    for (std::size_t s = 0; s < kStandardSettings.size(); ++s) {
        const MeasurementSetting setting =
            MeasurementSetting::parse(kStandardSettings[s]);
        const std::vector<OutcomeEvent> events = sample_partitioned(
            state, setting, config.shots, config.visibility, config.seed + s,
            config.partitions);
        table.add_events(events);
    }
    ExperimentReport report = report_from_table(table, config.strategy);
    report.mode = ExperimentReport::Mode::kSampled;
    report.theta = config.theta;
    report.visibility = config.visibility;
    report.shots = config.shots;
    report.seed = config.seed;
    return SampledRun{std::move(report), std::move(table)};
}

ExperimentReport run_from_counts(const CoincidenceTable &table,
                                 const LabelingStrategy &strategy) {
    ExperimentReport report = report_from_table(table, strategy);
    report.mode = ExperimentReport::Mode::kCounts;
    return report;
}

SweepResult run_sweep(const ExperimentConfig &base, SweepParam param,
                      double from, double to, std::size_t steps) {
    if (steps < 2) {
        throw std::invalid_argument("a sweep needs at least 2 steps");
    }
    if (param == SweepParam::kVisibility) {
        const auto in_domain = [](double v) { return v >= 0.0 && v <= 1.0; };
        if (!in_domain(from) || !in_domain(to)) {
            throw std::invalid_argument(
                "visibility sweep range must stay within [0, 1]");
        }
    }
    if (!std::isfinite(from) || !std::isfinite(to)) {
        throw std::invalid_argument("sweep range must be finite");
    }

    SweepResult result;
    result.param = param;
    result.points.reserve(steps);
    const double delta = (to - from) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        const double value =
            (i + 1 == steps) ? to : from + static_cast<double>(i) * delta;
        ExperimentConfig config = base;
        if (param == SweepParam::kVisibility) {
            config.visibility = value;
        } else {
            config.theta = value;
        }
        const ExperimentReport report = run_exact(config);
        result.points.push_back(SweepPoint{value,
                                           report.chsh.combination_value,
                                           report.ch.combination_value});
    }
    return result;
}

std::string strategy_name(const LabelingStrategy &strategy) {
    if (strategy.kind() == LabelingKind::kOutcomeBased) {
        return "outcome";
    }
    return "fixed:" + std::to_string(strategy.k_location());
}

std::string render_text(const ExperimentReport &report) {
    std::ostringstream out;
    switch (report.mode) {
    case ExperimentReport::Mode::kExact:
        out << "exact analysis\n";
        break;
    case ExperimentReport::Mode::kSampled:
        out << "sampled run\n";
        break;
    case ExperimentReport::Mode::kCounts:
        out << "external counts\n";
        break;
    }
    if (report.theta) {
        out << "  theta      " << fmt(*report.theta) << '\n';
    }
    if (report.visibility) {
        out << "  visibility " << fmt(*report.visibility) << '\n';
    }
    out << "  strategy   " << strategy_name(report.strategy) << '\n';
    if (report.shots) {
        out << "  shots      " << *report.shots << " per setting\n";
    }
    if (report.seed) {
        out << "  seed       " << *report.seed << '\n';
    }

    out << "\ncorrelations of the labeled pair\n";
    append_term_line(out, "c_zz", report.c_zz);
    append_term_line(out, "c_zx", report.c_zx);
    append_term_line(out, "c_xz", report.c_xz);
    append_term_line(out, "c_xx", report.c_xx);
    out << "chsh combination |c_zz - c_zx - c_xz - c_xx| = "
        << fmt(report.chsh.combination_value) << '\n';
    out << "  bounds: local " << fmt(report.chsh.lhv_bound) << ", quantum "
        << fmt(report.chsh.cirelson_bound) << ", algebraic max "
        << fmt(report.chsh.algebraic_max) << '\n';

    out << "\nprobability terms (CH form)\n";
    out << "  p_zz = " << fmt(report.probabilities.p_zz) << '\n';
    out << "  p_zx = " << fmt(report.probabilities.p_zx) << '\n';
    out << "  p_xz = " << fmt(report.probabilities.p_xz) << '\n';
    out << "  p_xx = " << fmt(report.probabilities.p_xx) << '\n';
    out << "  six-term bound on p_zx and p_xz = " << fmt(report.six_term)
        << '\n';
    out << "ch combination p_zz - p_zx - p_xz - p_xx = "
        << fmt(report.ch.combination_value) << '\n';
    out << "  bounds: local " << fmt(report.ch.lhv_bound) << ", quantum "
        << fmt(report.ch.cirelson_bound) << ", algebraic max "
        << fmt(report.ch.algebraic_max) << '\n';
    return std::move(out).str();
}

std::string render_json(const ExperimentReport &report) {
    nlohmann::json j;
    j["state_params"] =
        report.theta ? nlohmann::json{{"theta", *report.theta}}
                     : nlohmann::json(nullptr);
    j["visibility"] = report.visibility
                          ? nlohmann::json(*report.visibility)
                          : nlohmann::json(nullptr);
    j["strategy"] = strategy_name(report.strategy);
    j["terms"]["correlations"] = {{"c_zz", term_to_json(report.c_zz)},
                                  {"c_zx", term_to_json(report.c_zx)},
                                  {"c_xz", term_to_json(report.c_xz)},
                                  {"c_xx", term_to_json(report.c_xx)}};
    j["terms"]["probabilities"] = {
        {"p_zz", report.probabilities.p_zz},
        {"p_zx", report.probabilities.p_zx},
        {"p_xz", report.probabilities.p_xz},
        {"p_xx", report.probabilities.p_xx},
        {"six_term_bound", report.six_term},
        {"zx_xz_source",
         report.probabilities.zx_xz_source == PZXSource::kPerSetting
             ? "per_setting"
             : "six_term_bound"}};
    j["ch_value"] = report.ch.combination_value;
    j["chsh_value"] = report.chsh.combination_value;
    j["bounds"] = {{"chsh", bounds_to_json(report.chsh)},
                   {"ch", bounds_to_json(report.ch)}};
    j["shots"] = report.shots ? nlohmann::json(*report.shots)
                              : nlohmann::json(nullptr);
    j["seed"] = report.seed ? nlohmann::json(*report.seed)
                            : nlohmann::json(nullptr);
    return j.dump(2) + "\n";
}

std::string render_csv(const SweepResult &sweep) {
    std::ostringstream out;
    out << "param,value,chsh,ch,bound_lhv,bound_cirelson,bound_max\n";
    const char *name =
        sweep.param == SweepParam::kVisibility ? "visibility" : "theta";
    for (const SweepPoint &point : sweep.points) {
        out << name << ',' << fmt(point.value) << ',' << fmt(point.chsh)
            << ',' << fmt(point.ch) << ',' << fmt(kLhvBoundChsh) << ','
            << fmt(kCirelsonBoundChsh) << ',' << fmt(kAlgebraicMaxChsh)
            << '\n';
    }
    return std::move(out).str();
}

std::string render_json(const SweepResult &sweep) {
    nlohmann::json j;
    j["param"] =
        sweep.param == SweepParam::kVisibility ? "visibility" : "theta";
    j["bounds"] = {{"lhv", kLhvBoundChsh},
                   {"cirelson", kCirelsonBoundChsh},
                   {"max", kAlgebraicMaxChsh}};
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepPoint &point : sweep.points) {
        rows.push_back({{"value", point.value},
                        {"chsh", point.chsh},
                        {"ch", point.ch}});
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

} // namespace ghzbell
