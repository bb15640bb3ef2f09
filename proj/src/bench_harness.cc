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

#include "qvsim/bench_harness.h"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <future>
#include <map>
#include <mutex>

#include "qvsim/circuit_io.h"
#include "qvsim/stats_verify.h"

namespace qvsim {

namespace {

using Clock = std::chrono::steady_clock;

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct TrialOutcome {
    std::optional<BenchmarkRecord> record;
    std::optional<SweepNotice> notice;
};

class TrialRunner {
   public:
    TrialRunner(const SweepConfig &config, const SweepHooks &hooks, Clock::time_point deadline)
        : config_(config), hooks_(hooks), deadline_(deadline) {
    }

    TrialOutcome run(int width, std::uint64_t trial, int engine_threads) {
        QvCircuit circuit = generate_qv_circuit(width, config_.master_seed, trial);
        if (config_.export_circuits_dir) {
            auto path = *config_.export_circuits_dir /
                        ("qv_w" + std::to_string(width) + "_t" + std::to_string(trial) + ".json");
            write_text_file(path, serialize_circuit(circuit));
        }
        notify_generated(circuit);
        GateCounts counts = count_gates(circuit);

        EngineConfig engine;
        engine.threads = engine_threads;
        engine.fusion = config_.fusion;
        engine.memory_budget_bytes = config_.memory_budget_bytes;
        engine.deadline = deadline_;

        RngStream trial_rng(derive_seed(config_.master_seed, static_cast<std::uint64_t>(width), trial));
        BenchmarkRecord rec;
        rec.width = width;
        rec.trial_index = trial;
        rec.su4_count = counts.su4;
        rec.swap_count = counts.swap;
        rec.seed = config_.master_seed;
        rec.threads = engine_threads;
        rec.fusion = config_.fusion;

        try {
            std::vector<std::uint64_t> heavy;
            std::optional<ExecutionResult> run;
            if (config_.noise_p) {
                // Heavy set comes from the noiseless circuit; that run is analysis, not timed.
                auto ideal = execute(circuit, engine);
                heavy = heavy_set(probabilities(ideal.final_state, engine_threads));
                RngStream noise_rng = trial_rng.fork(kNoiseStreamId);
                QvCircuit noisy = inject_pauli_noise(circuit, NoiseConfig{*config_.noise_p}, noise_rng);
                run.emplace(execute(noisy, engine));
            } else {
                run.emplace(execute(circuit, engine));
            }
            rec.elapsed_seconds = run->elapsed_seconds;

            auto probs = probabilities(run->final_state, engine_threads);
            if (!config_.noise_p) {
                heavy = heavy_set(probs);
            }
            rec.ideal_hop = hop_on_set(probs, heavy);
            if (config_.shots > 0) {
                RngStream shot_rng = trial_rng.fork(kShotStreamId);
                rec.sampled_hop = sampled_hop(sample_measurements(run->final_state, config_.shots, shot_rng), heavy);
            }
        } catch (const TimeLimitExceeded &e) {
            return {std::nullopt, SweepNotice{NoticeKind::TimeLimit, width, trial, e.what()}};
        }
        rec.timestamp = utc_timestamp();
        notify_record(rec);
        return {rec, std::nullopt};
    }

   private:
    void notify_generated(const QvCircuit &c) {
        if (hooks_.after_generate) {
            std::lock_guard lock(hook_mutex_);
            hooks_.after_generate(c);
        }
    }
    void notify_record(const BenchmarkRecord &r) {
        if (hooks_.after_record) {
            std::lock_guard lock(hook_mutex_);
            hooks_.after_record(r);
        }
    }

    const SweepConfig &config_;
    const SweepHooks &hooks_;
    Clock::time_point deadline_;
    std::mutex hook_mutex_;
};

}  // namespace

void SweepConfig::validate() const {
    if (min_width < 2) {
        throw ConfigError("Minimum width must be at least 2.");
    }
    if (max_width < min_width) {
        throw ConfigError("Maximum width must not be below the minimum width.");
    }
    if (max_width > 62) {
        throw ConfigError("Maximum width must not exceed 62.");
    }
    if (trials_per_width < 1) {
        throw ConfigError("At least one trial per width is required.");
    }
    for (size_t i = 0; i < trial_schedule.size(); i++) {
        if (trial_schedule[i].trials < 1) {
            throw ConfigError("Trial schedule steps need at least one trial.");
        }
        if (i > 0 && trial_schedule[i].from_width <= trial_schedule[i - 1].from_width) {
            throw ConfigError("Trial schedule widths must be strictly increasing.");
        }
    }
    if (!(time_limit_seconds > 0)) {
        throw ConfigError("Time limit must be positive.");
    }
    if (threads < 1) {
        throw ConfigError("Thread count must be positive.");
    }
    if (parallel_trials < 1) {
        throw ConfigError("Parallel trial count must be positive.");
    }
    if (noise_p && !(*noise_p >= 0 && *noise_p <= 1)) {
        throw ConfigError("Noise probability must lie in [0, 1].");
    }
}

std::uint64_t SweepConfig::trials_for_width(int width) const {
    std::uint64_t trials = trials_per_width;
    for (const TrialStep &s : trial_schedule) {
        if (width >= s.from_width) {
            trials = s.trials;
        }
    }
    return trials;
}

SweepResult run_sweep(const SweepConfig &config, const SweepHooks &hooks) {
    config.validate();
    const int concurrent = config.parallel_trials;
    if (statevector_bytes(config.min_width) * static_cast<std::uint64_t>(concurrent) > config.memory_budget_bytes) {
        throw CapacityError(
            config.min_width, statevector_bytes(config.min_width) * concurrent, config.memory_budget_bytes);
    }
    if (config.export_circuits_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*config.export_circuits_dir, ec);
        if (ec) {
            throw IoError("Cannot create circuit export directory " + config.export_circuits_dir->string() + ".");
        }
    }

    const auto start = Clock::now();
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(config.time_limit_seconds));
    TrialRunner runner(config, hooks, deadline);
    const int engine_threads = std::max(1, config.threads / concurrent);

    SweepResult result;
    for (int width = config.min_width; width <= config.max_width && !result.stopped_early; width++) {
        std::uint64_t need = statevector_bytes(width) * static_cast<std::uint64_t>(concurrent);
        if (need > config.memory_budget_bytes) {
            result.notices.push_back(
                {NoticeKind::CapacitySkip, width, 0, CapacityError(width, need, config.memory_budget_bytes).what()});
            continue;
        }
        const std::uint64_t trials = config.trials_for_width(width);
        std::vector<double> hops;
        for (std::uint64_t first = 0; first < trials && !result.stopped_early; first += concurrent) {
            std::uint64_t last = std::min<std::uint64_t>(trials, first + concurrent);
            std::vector<TrialOutcome> outcomes;
            if (Clock::now() >= deadline) {
                result.notices.push_back(
                    {NoticeKind::TimeLimit, width, first, "Time limit reached before starting this trial."});
                result.stopped_early = true;
                break;
            }
            if (concurrent == 1) {
                outcomes.push_back(runner.run(width, first, engine_threads));
            } else {
                std::vector<std::future<TrialOutcome>> futures;
                for (std::uint64_t t = first; t < last; t++) {
                    futures.push_back(std::async(std::launch::async, [&runner, width, t, engine_threads] {
                        return runner.run(width, t, engine_threads);
                    }));
                }
                for (auto &f : futures) {
                    outcomes.push_back(f.get());
                }
            }
            for (auto &o : outcomes) {
                if (o.record) {
                    hops.push_back(o.record->ideal_hop);
                    result.records.push_back(std::move(*o.record));
                }
                if (o.notice) {
                    result.notices.push_back(std::move(*o.notice));
                    result.stopped_early = true;
                }
            }
        }
        if (hops.size() >= 2) {
            result.decisions.push_back(qv_decision(hops, width));
        }
    }
    return result;
}

ScalingReport scaling_report(std::span<const BenchmarkRecord> records) {
    std::map<int, std::vector<double>> by_width;
    for (const auto &r : records) {
        by_width[r.width].push_back(r.elapsed_seconds);
    }
    if (by_width.size() < 2) {
        throw std::invalid_argument("Scaling report needs records for at least two widths.");
    }
    ScalingReport report;
    double log_sum = 0;
    int log_count = 0;
    for (auto &[width, times] : by_width) {
        std::sort(times.begin(), times.end());
        size_t n = times.size();
        double median = n % 2 ? times[n / 2] : (times[n / 2 - 1] + times[n / 2]) / 2;
        ScalingRow row{width, median, std::nullopt};
        if (!report.rows.empty()) {
            const ScalingRow &prev = report.rows.back();
            int gap = width - prev.width;
            if (prev.median_seconds > 0 && median > 0) {
                double per_qubit = std::pow(median / prev.median_seconds, 1.0 / gap);
                row.ratio_to_previous = per_qubit;
                log_sum += std::log(per_qubit) * gap;
                log_count += gap;
            }
        }
        report.rows.push_back(row);
    }
    if (log_count == 0) {
        throw std::invalid_argument("Scaling report needs positive times at two or more widths.");
    }
    report.geomean_ratio = std::exp(log_sum / log_count);
    return report;
}

}  // namespace qvsim
