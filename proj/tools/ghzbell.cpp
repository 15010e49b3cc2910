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

// Command-line front end: exact analysis, sampled experiments, parameter
// sweeps, and the two bound checkers. See `ghzbell --help`.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghzbell/pipeline.hpp"

namespace {

constexpr double pi = 3.14159265358979323846;

std::string g_format = "text";

void emit_error(const std::string &message) {
    if (g_format == "json") {
        nlohmann::json j;
        j["error"] = message;
        std::cerr << j.dump() << '\n';
    } else {
        std::cerr << "error: " << message << '\n';
    }
}

void deliver(const std::string &content, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing output file: " + out_path);
    }
}

ghzbell::LabelingStrategy parse_strategy(const std::string &text) {
    if (text == "outcome") {
        return ghzbell::LabelingStrategy::outcome_based();
    }
    if (text.rfind("fixed:", 0) == 0) {
        const std::string location = text.substr(6);
        if (location.size() == 1 && location[0] >= '0' && location[0] <= '2') {
            return ghzbell::LabelingStrategy::location_fixed(
                static_cast<std::size_t>(location[0] - '0'));
        }
    }
    throw std::runtime_error(
        "strategy must be 'outcome' or 'fixed:<location>' with location "
        "0, 1, or 2; got '" +
        text + "'");
}

std::string fmt(double value) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.15g", value);
    return buffer;
}

struct RunOptions {
    double theta = pi / 4.0;
    double visibility = 1.0;
    std::size_t shots = 100000;
    std::uint64_t seed = 1;
    std::string strategy = "outcome";
    std::string format = "text";
    std::string out_path;
    std::string counts_out = "counts.txt";
    std::string counts_in;

    ghzbell::ExperimentConfig to_config() const {
        ghzbell::ExperimentConfig config;
        config.theta = theta;
        config.visibility = visibility;
        config.shots = shots;
        config.seed = seed;
        config.strategy = parse_strategy(strategy);
        return config;
    }
};

void add_state_flags(CLI::App *cmd, RunOptions &options) {
    cmd->add_option("--theta", options.theta,
                    "State weighting angle in radians")
        ->capture_default_str();
    cmd->add_option("--visibility", options.visibility,
                    "Mix of ideal distribution (1) and uniform noise (0)")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--strategy", options.strategy,
                    "Labeling strategy: outcome | fixed:<location>")
        ->capture_default_str();
}

void add_output_flags(CLI::App *cmd, RunOptions &options) {
    cmd->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", options.out_path,
                    "Write the report here instead of stdout");
}

std::string render_report(const ghzbell::ExperimentReport &report,
                          const std::string &format) {
    if (format == "json") {
        return ghzbell::render_json(report);
    }
    if (format == "csv") {
        throw std::runtime_error(
            "csv output is defined for sweeps only; use json or text");
    }
    return ghzbell::render_text(report);
}

void run_exact_command(const RunOptions &options) {
    const ghzbell::ExperimentReport report =
        ghzbell::run_exact(options.to_config());
    deliver(render_report(report, options.format), options.out_path);
}

void run_sample_command(const RunOptions &options) {
    if (!options.counts_in.empty()) {
        const ghzbell::CoincidenceTable table =
            ghzbell::load_counts(std::filesystem::path(options.counts_in));
        const ghzbell::ExperimentReport report =
            ghzbell::run_from_counts(table, parse_strategy(options.strategy));
        deliver(render_report(report, options.format), options.out_path);
        return;
    }
    const ghzbell::SampledRun run = ghzbell::run_sampled(options.to_config());
    ghzbell::save_counts(run.table,
                         std::filesystem::path(options.counts_out));
    deliver(render_report(run.report, options.format), options.out_path);
}

struct SweepOptions {
    RunOptions run;
    std::string param = "visibility";
    double from = 0.0;
    double to = 1.0;
    std::size_t steps = 11;
};

void run_sweep_command(const SweepOptions &options) {
    const ghzbell::SweepParam param = options.param == "theta"
                                          ? ghzbell::SweepParam::kTheta
                                          : ghzbell::SweepParam::kVisibility;
    const ghzbell::SweepResult sweep =
        ghzbell::run_sweep(options.run.to_config(), param, options.from,
                           options.to, options.steps);
    const std::string content = options.run.format == "json"
                                    ? ghzbell::render_json(sweep)
                                    : ghzbell::render_csv(sweep);
    deliver(content, options.run.out_path);
}

struct LhvOptions {
    int m = 1;
    int n = 1;
    std::string format = "text";
    std::string out_path;
};

void run_lhv_command(const LhvOptions &options) {
    const ghzbell::LHVResult result =
        ghzbell::lhv_max(ghzbell::CHSHParams{options.m, options.n});
    std::string content;
    if (options.format == "json") {
        nlohmann::json j;
        j["m"] = options.m;
        j["n"] = options.n;
        j["max"] = result.max_value;
        nlohmann::json argmax = nlohmann::json::array();
        for (const ghzbell::LHVAssignment &a : result.argmax) {
            argmax.push_back({a.v_A, a.v_a, a.v_B, a.v_b});
        }
        j["argmax"] = std::move(argmax);
        content = j.dump(2) + "\n";
    } else {
        std::string text;
        text += "max |combination| over the 16 deterministic assignments = " +
                fmt(result.max_value) + "\n";
        text += "assignments attaining +" + fmt(result.max_value) +
                " (v_A v_a v_B v_b):\n";
        for (const ghzbell::LHVAssignment &a : result.argmax) {
            const auto sign = [](int v) {
                return v > 0 ? std::string("+1") : std::string("-1");
            };
            text += "  " + sign(a.v_A) + " " + sign(a.v_a) + " " +
                    sign(a.v_B) + " " + sign(a.v_b) + "\n";
        }
        content = text;
    }
    deliver(content, options.out_path);
}

struct CirelsonOptions {
    // Canonical directions: A along z, a along x, B and b along the two
    // diagonals between them; these reach the quantum maximum.
    std::vector<double> A{0.0, 0.0};
    std::vector<double> a{pi / 2.0, 0.0};
    std::vector<double> B{pi / 4.0, 0.0};
    std::vector<double> b{pi / 4.0, pi};
    int m = 1;
    int n = 1;
    std::size_t random_samples = 0;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string out_path;
};

ghzbell::DichotomicObservable observable_from(const std::vector<double> &angles) {
    return ghzbell::DichotomicObservable::from_angles(angles[0], angles[1]);
}

void run_cirelson_command(const CirelsonOptions &options) {
    const ghzbell::CHSHParams params{options.m, options.n};
    const auto A = observable_from(options.A);
    const auto a = observable_from(options.a);
    const auto B = observable_from(options.B);
    const auto b = observable_from(options.b);
    const double norm = ghzbell::cirelson_norm(A, a, B, b, params);
    const double via_square =
        ghzbell::cirelson_norm_via_square(A, a, B, b, params);

    double random_max = 0.0;
    bool random_within = true;
    if (options.random_samples > 0) {
        std::mt19937_64 rng(options.seed);
        const auto uniform = [&rng] {
            return static_cast<double>(rng() >> 11) * 0x1.0p-53;
        };
        const auto random_direction = [&] {
            const double z = 2.0 * uniform() - 1.0;
            const double azimuth = 2.0 * pi * uniform();
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            return ghzbell::DichotomicObservable(
                {r * std::cos(azimuth), r * std::sin(azimuth), z});
        };
        for (std::size_t i = 0; i < options.random_samples; ++i) {
            const double sample_norm =
                ghzbell::cirelson_norm(random_direction(), random_direction(),
                                       random_direction(), random_direction(),
                                       params);
            random_max = std::max(random_max, sample_norm);
            if (sample_norm > ghzbell::kCirelsonBoundChsh + 1e-9) {
                random_within = false;
            }
        }
    }

    std::string content;
    if (options.format == "json") {
        nlohmann::json j;
        j["norm"] = norm;
        j["via_square"] = via_square;
        j["bound"] = ghzbell::kCirelsonBoundChsh;
        if (options.random_samples > 0) {
            j["random"] = {{"samples", options.random_samples},
                           {"seed", options.seed},
                           {"max_norm", random_max},
                           {"all_within_bound", random_within}};
        }
        content = j.dump(2) + "\n";
    } else {
        content += "combination operator norm = " + fmt(norm) + "\n";
        content += "  square-identity path   = " + fmt(via_square) + "\n";
        content += "  quantum bound 2*sqrt(2) = " +
                   fmt(ghzbell::kCirelsonBoundChsh) + "\n";
        if (options.random_samples > 0) {
            content += "random directions: " +
                       std::to_string(options.random_samples) +
                       " samples, max norm " + fmt(random_max) +
                       (random_within ? ", all within the bound\n"
                                      : ", BOUND EXCEEDED\n");
        }
    }
    deliver(content, options.out_path);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{
        "Three-qubit entanglement experiment harness: exact and sampled "
        "correlation/CH-inequality pipelines with labeling-based "
        "postselection, plus local-realistic and quantum bound checkers."};
    app.require_subcommand(1);

    RunOptions exact_options;
    CLI::App *exact = app.add_subcommand(
        "exact", "Closed-form pipeline values, no sampling");
    add_state_flags(exact, exact_options);
    add_output_flags(exact, exact_options);
    exact->callback([&] {
        g_format = exact_options.format;
        run_exact_command(exact_options);
    });

    RunOptions sample_options;
    CLI::App *sample = app.add_subcommand(
        "sample", "Seeded Monte Carlo run over the five standard settings");
    add_state_flags(sample, sample_options);
    sample->add_option("--shots", sample_options.shots, "Shots per setting")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sample->add_option("--seed", sample_options.seed, "Base RNG seed")
        ->capture_default_str();
    sample
        ->add_option("--counts-out", sample_options.counts_out,
                     "Where to write the coincidence counts")
        ->capture_default_str();
    sample->add_option(
        "--counts-in", sample_options.counts_in,
        "Skip sampling; run the pipelines on this counts file");
    add_output_flags(sample, sample_options);
    sample->callback([&] {
        g_format = sample_options.format;
        run_sample_command(sample_options);
    });

    SweepOptions sweep_options;
    CLI::App *sweep = app.add_subcommand(
        "sweep", "Exact-path parameter sweep, CSV rows per grid point");
    add_state_flags(sweep, sweep_options.run);
    sweep
        ->add_option("--param", sweep_options.param,
                     "Which parameter to sweep")
        ->check(CLI::IsMember({"visibility", "theta"}))
        ->capture_default_str();
    sweep->add_option("--from", sweep_options.from, "Range start")
        ->capture_default_str();
    sweep->add_option("--to", sweep_options.to, "Range end")
        ->capture_default_str();
    sweep->add_option("--steps", sweep_options.steps, "Grid points")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
        ->capture_default_str();
    add_output_flags(sweep, sweep_options.run);
    sweep->callback([&] {
        g_format = sweep_options.run.format;
        run_sweep_command(sweep_options);
    });

    LhvOptions lhv_options;
    CLI::App *lhv = app.add_subcommand(
        "lhv", "Enumerate all 16 deterministic local strategies");
    lhv->add_option("--m", lhv_options.m, "Sign parameter m")
        ->check(CLI::IsMember({-1, 1}))
        ->capture_default_str();
    lhv->add_option("--n", lhv_options.n, "Sign parameter n")
        ->check(CLI::IsMember({-1, 1}))
        ->capture_default_str();
    lhv->add_option("--format", lhv_options.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    lhv->add_option("--out", lhv_options.out_path,
                    "Write the report here instead of stdout");
    lhv->callback([&] {
        g_format = lhv_options.format;
        run_lhv_command(lhv_options);
    });

    CirelsonOptions cirelson_options;
    CLI::App *cirelson = app.add_subcommand(
        "cirelson",
        "Quantum bound of the combination for four measurement directions");
    cirelson
        ->add_option("--A", cirelson_options.A,
                     "First-party direction 1: polar azimuth (radians)")
        ->expected(2);
    cirelson
        ->add_option("--a", cirelson_options.a,
                     "First-party direction 2: polar azimuth (radians)")
        ->expected(2);
    cirelson
        ->add_option("--B", cirelson_options.B,
                     "Second-party direction 1: polar azimuth (radians)")
        ->expected(2);
    cirelson
        ->add_option("--b", cirelson_options.b,
                     "Second-party direction 2: polar azimuth (radians)")
        ->expected(2);
    cirelson->add_option("--m", cirelson_options.m, "Sign parameter m")
        ->check(CLI::IsMember({-1, 1}))
        ->capture_default_str();
    cirelson->add_option("--n", cirelson_options.n, "Sign parameter n")
        ->check(CLI::IsMember({-1, 1}))
        ->capture_default_str();
    cirelson->add_option("--random", cirelson_options.random_samples,
                         "Also check this many seeded random quadruples");
    cirelson->add_option("--seed", cirelson_options.seed,
                         "Seed for --random")
        ->capture_default_str();
    cirelson->add_option("--format", cirelson_options.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cirelson->add_option("--out", cirelson_options.out_path,
                         "Write the report here instead of stdout");
    cirelson->callback([&] {
        g_format = cirelson_options.format;
        run_cirelson_command(cirelson_options);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &error) {
        return app.exit(error);
    } catch (const std::exception &error) {
        emit_error(error.what());
        return 1;
    }
    return 0;
}
