// Copyright 2026 The qvsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qvbench: Quantum Volume width sweeps and statistical checks.
//
// Exit codes: 0 success, 1 configuration error, 2 minimum width does not fit
// in the memory budget, 3 I/O error.

#include <cctype>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qvsim/bench_harness.h"
#include "qvsim/stats_verify.h"

using namespace qvsim;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitIo = 3;

std::uint64_t parse_bytes(const std::string &text) {
    if (text.empty()) {
        throw ConfigError("Empty memory budget.");
    }
    size_t used = 0;
    double value = std::stod(text, &used);
    std::string suffix = text.substr(used);
    double scale = 1;
    if (suffix == "" || suffix == "B") {
        scale = 1;
    } else if (suffix == "K" || suffix == "KiB") {
        scale = 1024.0;
    } else if (suffix == "M" || suffix == "MiB") {
        scale = 1024.0 * 1024;
    } else if (suffix == "G" || suffix == "GiB") {
        scale = 1024.0 * 1024 * 1024;
    } else {
        throw ConfigError("Unknown memory budget suffix '" + suffix + "'.");
    }
    if (value <= 0) {
        throw ConfigError("Memory budget must be positive.");
    }
    return static_cast<std::uint64_t>(value * scale);
}

std::vector<TrialStep> parse_schedule(const std::string &text) {
    std::vector<TrialStep> steps;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw ConfigError("Trial schedule items look like WIDTH:TRIALS, got '" + item + "'.");
        }
        steps.push_back({std::stoi(item.substr(0, colon)), std::stoull(item.substr(colon + 1))});
    }
    return steps;
}

void print_or_write(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

SuiteTable run_suite(const std::string &suite, const SweepConfig &cfg, std::uint64_t samples, std::uint64_t dimension,
                     const std::vector<double> &noise_levels) {
    EngineConfig engine;
    engine.threads = cfg.threads;
    engine.fusion = cfg.fusion;
    engine.memory_budget_bytes = cfg.memory_budget_bytes;

    if (suite == "hop") {
        std::vector<int> widths;
        for (int w = cfg.min_width; w <= cfg.max_width; w++) {
            widths.push_back(w);
        }
        SuiteTable t{"hop", {"width", "trials", "mean_hop", "stderr", "deviation"}, {}};
        for (const auto &r : hop_convergence_suite(widths, cfg.trials_per_width, cfg.master_seed, engine)) {
            t.rows.push_back({double(r.width), double(r.trials), r.mean_hop, r.stderr_hop, r.mean_hop - kAsymptoticHop});
        }
        return t;
    }
    if (suite == "porter-thomas") {
        SuiteTable t{"porter-thomas", {"width", "trial", "ks_statistic", "ks_threshold", "passed"}, {}};
        for (std::uint64_t trial = 0; trial < cfg.trials_per_width; trial++) {
            auto r = execute(generate_qv_circuit(cfg.max_width, cfg.master_seed, trial), engine);
            auto fit = porter_thomas_fit(probabilities(r.final_state));
            t.rows.push_back({double(cfg.max_width), double(trial), fit.ks_statistic, fit.ks_threshold, fit.passed ? 1.0 : 0.0});
        }
        return t;
    }
    if (suite == "marginal") {
        RngStream rng(cfg.master_seed);
        auto ys = sample_haar_state_marginals(dimension, samples, rng);
        auto fit = finite_n_marginal_fit(ys, dimension);
        return SuiteTable{
            "marginal",
            {"dimension", "samples", "ks_statistic", "ks_threshold", "passed"},
            {{double(dimension), double(samples), fit.ks_statistic, fit.ks_threshold, fit.passed ? 1.0 : 0.0}}};
    }
    if (suite == "noise") {
        SuiteTable t{"noise", {"width", "p", "trials", "mean_hop", "stderr"}, {}};
        for (const auto &r : noisy_hop_suite(cfg.max_width, noise_levels, cfg.trials_per_width, cfg.master_seed, engine)) {
            t.rows.push_back({double(cfg.max_width), r.p, double(r.trials), r.mean_hop, r.stderr_hop});
        }
        return t;
    }
    throw ConfigError("Unknown suite '" + suite + "'.");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum Volume statevector benchmark"};

    SweepConfig cfg;
    cfg.min_width = 4;
    cfg.max_width = 12;
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());
    std::string fusion = "off";
    std::string memory_budget;
    std::string format = "csv";
    std::string out_path;
    std::string export_dir;
    std::string suite;
    std::string svg_path;
    std::string schedule;
    double noise_p = -1;
    std::uint64_t samples = 10000;
    std::uint64_t dimension = 8;
    std::vector<double> noise_levels{0, 0.01, 0.05, 0.2, 1};

    app.add_option("--min-qubits", cfg.min_width, "Smallest width in the sweep")->capture_default_str();
    app.add_option("--max-qubits", cfg.max_width, "Largest width in the sweep")->capture_default_str();
    app.add_option("--trials", cfg.trials_per_width, "Random circuits per width")->capture_default_str();
    app.add_option("--trial-schedule", schedule, "Per-width trial overrides, e.g. 16:10,22:1");
    app.add_option("--shots", cfg.shots, "Measurement shots per circuit (0 = exact HOP only)")->capture_default_str();
    app.add_option("--seed", cfg.master_seed, "Master seed")->capture_default_str();
    app.add_option("--threads", cfg.threads, "Engine threads")->capture_default_str();
    app.add_option("--parallel-trials", cfg.parallel_trials, "Trials executed concurrently")->capture_default_str();
    app.add_option("--fusion", fusion, "Gate fusion")->check(CLI::IsMember({"on", "off"}))->capture_default_str();
    app.add_option("--time-limit-seconds", cfg.time_limit_seconds, "Wall-clock limit for the whole sweep")
        ->capture_default_str();
    app.add_option("--noise-p", noise_p, "Two-qubit Pauli error probability after each SU4 gate");
    app.add_option("--memory-budget", memory_budget, "Statevector memory budget in bytes (K/M/G suffix allowed)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", out_path, "Output file (default: stdout)");
    app.add_option("--export-circuits", export_dir, "Directory for circuit interchange files");
    app.add_option("--suite", suite, "Run a statistical check instead of a timing sweep")
        ->check(CLI::IsMember({"hop", "porter-thomas", "marginal", "noise"}));
    app.add_option("--svg", svg_path, "Write a log-scale time-vs-width chart");
    app.add_option("--samples", samples, "Samples for the marginal suite")->capture_default_str();
    app.add_option("--dimension", dimension, "State dimension for the marginal suite")->capture_default_str();
    app.add_option("--noise-levels", noise_levels, "Error probabilities for the noise suite")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    const OutputFormat out_format = format == "json" ? OutputFormat::JSON : OutputFormat::CSV;
    try {
        cfg.fusion = fusion == "on";
        if (noise_p >= 0) {
            cfg.noise_p = noise_p;
        }
        if (!memory_budget.empty()) {
            cfg.memory_budget_bytes = parse_bytes(memory_budget);
        }
        if (!schedule.empty()) {
            cfg.trial_schedule = parse_schedule(schedule);
        }
        if (!export_dir.empty()) {
            cfg.export_circuits_dir = export_dir;
        }
        cfg.validate();

        if (!suite.empty()) {
            if (suite != "marginal" && statevector_bytes(cfg.max_width) > cfg.memory_budget_bytes) {
                throw CapacityError(cfg.max_width, statevector_bytes(cfg.max_width), cfg.memory_budget_bytes);
            }
            SuiteTable table = run_suite(suite, cfg, samples, dimension, noise_levels);
            print_or_write(format_suite_table(table, out_format), out_path);
            return 0;
        }

        SweepHooks hooks;
        hooks.after_record = [](const BenchmarkRecord &r) {
            std::fprintf(
                stderr, "width %d trial %llu: %.6f s, HOP %.4f\n", r.width,
                static_cast<unsigned long long>(r.trial_index), r.elapsed_seconds, r.ideal_hop);
        };
        SweepResult result = run_sweep(cfg, hooks);
        for (const auto &n : result.notices) {
            std::fprintf(stderr, "notice (width %d): %s\n", n.width, n.message.c_str());
        }
        for (const auto &d : result.decisions) {
            std::fprintf(
                stderr, "width %d: mean HOP %.4f +- %.4f over %llu trials -> %s\n", d.width, d.mean_hop, d.stderr_hop,
                static_cast<unsigned long long>(d.trials), d.passed ? "pass" : "fail");
        }
        print_or_write(format_results(result.records, result.decisions, out_format, result.notices), out_path);
        if (!svg_path.empty()) {
            try {
                write_text_file(svg_path, scaling_svg(scaling_report(result.records)));
            } catch (const std::invalid_argument &e) {
                std::fprintf(stderr, "no chart written: %s\n", e.what());
            }
        }
        return 0;
    } catch (const CapacityError &e) {
        std::fprintf(stderr, "capacity error: %s\n", e.what());
        return kExitCapacity;
    } catch (const IoError &e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::out_of_range &e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::runtime_error &e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return kExitIo;
    }
}
