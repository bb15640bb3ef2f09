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

#ifndef QVSIM_BENCH_HARNESS_H
#define QVSIM_BENCH_HARNESS_H

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvsim/heavy_output.h"
#include "qvsim/qv_circuit.h"

namespace qvsim {

enum class OutputFormat { CSV, JSON };

/// Twelve hours.
inline constexpr double kDefaultTimeLimitSeconds = 43200;

/// From `from_width` upward (until the next step) run `trials` trials per width.
struct TrialStep {
    int from_width = 0;
    std::uint64_t trials = 0;
};

struct SweepConfig {
    int min_width = 2;
    int max_width = 2;
    std::uint64_t trials_per_width = 100;
    /// Optional override of trials_per_width for wider circuits, e.g.
    /// {{16, 10}, {22, 1}}. Steps must have increasing from_width.
    std::vector<TrialStep> trial_schedule;
    /// Measurement shots per trial; 0 computes the ideal HOP only.
    std::uint64_t shots = 0;
    std::uint64_t master_seed = 0;
    int threads = 1;
    bool fusion = false;
    double time_limit_seconds = kDefaultTimeLimitSeconds;
    std::optional<double> noise_p;
    std::uint64_t memory_budget_bytes = default_memory_budget();
    /// Trials run concurrently; engine threads are divided among them.
    int parallel_trials = 1;
    /// When set, every generated circuit is written here as an interchange file.
    std::optional<std::filesystem::path> export_circuits_dir;

    /// Throws ConfigError describing the first violated constraint.
    void validate() const;
    std::uint64_t trials_for_width(int width) const;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BenchmarkRecord {
    int width = 0;
    std::uint64_t trial_index = 0;
    /// Execution only: circuit generation and HOP analysis are outside the clock.
    double elapsed_seconds = 0;
    std::uint64_t su4_count = 0;
    std::uint64_t swap_count = 0;
    double ideal_hop = 0;
    std::optional<double> sampled_hop;
    /// Master seed; with width and trial_index it pins the circuit.
    std::uint64_t seed = 0;
    int threads = 1;
    bool fusion = false;
    /// UTC, ISO 8601. Not part of the CSV layout.
    std::string timestamp;

    bool operator==(const BenchmarkRecord &) const = default;
};

enum class NoticeKind { CapacitySkip, TimeLimit };

struct SweepNotice {
    NoticeKind kind = NoticeKind::CapacitySkip;
    int width = 0;
    std::uint64_t trial_index = 0;
    std::string message;
};

struct SweepResult {
    std::vector<BenchmarkRecord> records;
    /// One per width that completed at least two trials.
    std::vector<QvDecision> decisions;
    std::vector<SweepNotice> notices;
    bool stopped_early = false;
};

/// Observation points around the timed region, for tests and progress output.
struct SweepHooks {
    std::function<void(const QvCircuit &)> after_generate;
    std::function<void(const BenchmarkRecord &)> after_record;
};

/// Runs the configured width sweep. Widths whose statevector exceeds the
/// memory budget are skipped with a notice; the minimum width must fit
/// (CapacityError otherwise). The time limit is checked before each trial and
/// inside execution; on expiry the sweep stops and keeps what it has.
SweepResult run_sweep(const SweepConfig &config, const SweepHooks &hooks = {});

struct ScalingRow {
    int width = 0;
    double median_seconds = 0;
    /// Per-qubit growth factor versus the previous width present.
    std::optional<double> ratio_to_previous;
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    double geomean_ratio = 0;
};

/// Median execution time per width and the per-qubit growth between
/// neighbouring widths. When widths are not adjacent the ratio is normalized
/// per qubit (the gap-th root). Throws std::invalid_argument with fewer than
/// two widths.
ScalingReport scaling_report(std::span<const BenchmarkRecord> records);

/// Exact CSV header line (without newline).
inline constexpr const char *kCsvHeader =
    "width,trial,elapsed_seconds,su4_count,swap_count,ideal_hop,sampled_hop,seed,threads,fusion";
inline constexpr int kResultsSchemaVersion = 1;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// CSV: header plus one row per record; decisions and notices are not part
/// of the CSV layout. JSON: {"schema_version", "records", "decisions", "notices"}.
std::string format_results(
    std::span<const BenchmarkRecord> records,
    std::span<const QvDecision> decisions,
    OutputFormat format,
    std::span<const SweepNotice> notices = {});

/// format_results written to `path`. Throws IoError.
void emit_results(
    std::span<const BenchmarkRecord> records,
    std::span<const QvDecision> decisions,
    OutputFormat format,
    const std::filesystem::path &path,
    std::span<const SweepNotice> notices = {});

struct ParsedResults {
    std::vector<BenchmarkRecord> records;
    std::vector<QvDecision> decisions;
    std::vector<SweepNotice> notices;
};

/// Inverse of format_results. Throws IoError on malformed text.
ParsedResults parse_results(std::string_view text, OutputFormat format);

/// Numeric result table of a statistical suite.
struct SuiteTable {
    std::string suite;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// CSV (header of column names) or JSON {"schema_version", "suite", "columns", "rows"}.
std::string format_suite_table(const SuiteTable &table, OutputFormat format);

/// Log-scale line chart of median time against width.
std::string scaling_svg(const ScalingReport &report);

/// Writes `contents` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path &path, std::string_view contents);

}  // namespace qvsim

#endif
