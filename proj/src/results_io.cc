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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qvsim/bench_harness.h"

namespace qvsim {

namespace {

using ojson = nlohmann::ordered_json;

std::string full_precision(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string_view notice_kind_name(NoticeKind k) {
    return k == NoticeKind::CapacitySkip ? "capacity_skip" : "time_limit";
}

NoticeKind parse_notice_kind(const std::string &s) {
    if (s == "capacity_skip") {
        return NoticeKind::CapacitySkip;
    }
    if (s == "time_limit") {
        return NoticeKind::TimeLimit;
    }
    throw IoError("Unknown notice kind '" + s + "'.");
}

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

double parse_double(const std::string &s) {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) {
        throw IoError("Bad number '" + s + "'.");
    }
    return v;
}

std::uint64_t parse_u64(const std::string &s) {
    size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) {
        throw IoError("Bad integer '" + s + "'.");
    }
    return v;
}

std::string format_csv(std::span<const BenchmarkRecord> records) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto &r : records) {
        out += std::to_string(r.width) + ',' + std::to_string(r.trial_index) + ',' + full_precision(r.elapsed_seconds) +
               ',' + std::to_string(r.su4_count) + ',' + std::to_string(r.swap_count) + ',' +
               full_precision(r.ideal_hop) + ',' + (r.sampled_hop ? full_precision(*r.sampled_hop) : "") + ',' +
               std::to_string(r.seed) + ',' + std::to_string(r.threads) + ',' + (r.fusion ? "true" : "false") + '\n';
    }
    return out;
}

ParsedResults parse_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw IoError("CSV results must start with the header line: " + std::string(kCsvHeader));
    }
    ParsedResults parsed;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto c = split_csv_line(line);
        if (c.size() != 10) {
            throw IoError("CSV row has " + std::to_string(c.size()) + " cells, expected 10.");
        }
        BenchmarkRecord r;
        try {
            r.width = static_cast<int>(parse_u64(c[0]));
            r.trial_index = parse_u64(c[1]);
            r.elapsed_seconds = parse_double(c[2]);
            r.su4_count = parse_u64(c[3]);
            r.swap_count = parse_u64(c[4]);
            r.ideal_hop = parse_double(c[5]);
            if (!c[6].empty()) {
                r.sampled_hop = parse_double(c[6]);
            }
            r.seed = parse_u64(c[7]);
            r.threads = static_cast<int>(parse_u64(c[8]));
        } catch (const std::logic_error &e) {
            throw IoError(std::string("Bad CSV row: ") + e.what());
        }
        if (c[9] != "true" && c[9] != "false") {
            throw IoError("CSV fusion cell must be true or false.");
        }
        r.fusion = c[9] == "true";
        parsed.records.push_back(std::move(r));
    }
    return parsed;
}

std::string format_json(
    std::span<const BenchmarkRecord> records, std::span<const QvDecision> decisions,
    std::span<const SweepNotice> notices) {
    ojson doc;
    doc["schema_version"] = kResultsSchemaVersion;
    doc["records"] = ojson::array();
    for (const auto &r : records) {
        ojson j;
        j["width"] = r.width;
        j["trial"] = r.trial_index;
        j["elapsed_seconds"] = r.elapsed_seconds;
        j["su4_count"] = r.su4_count;
        j["swap_count"] = r.swap_count;
        j["ideal_hop"] = r.ideal_hop;
        if (r.sampled_hop) {
            j["sampled_hop"] = *r.sampled_hop;
        }
        j["seed"] = r.seed;
        j["threads"] = r.threads;
        j["fusion"] = r.fusion;
        j["timestamp"] = r.timestamp;
        doc["records"].push_back(std::move(j));
    }
    doc["decisions"] = ojson::array();
    for (const auto &d : decisions) {
        doc["decisions"].push_back(ojson{
            {"width", d.width},
            {"mean_hop", d.mean_hop},
            {"stderr", d.stderr_hop},
            {"trials", d.trials},
            {"passed", d.passed},
            {"quantum_volume", d.quantum_volume}});
    }
    doc["notices"] = ojson::array();
    for (const auto &n : notices) {
        doc["notices"].push_back(ojson{
            {"kind", notice_kind_name(n.kind)},
            {"width", n.width},
            {"trial", n.trial_index},
            {"message", n.message}});
    }
    return doc.dump(2) + "\n";
}

ParsedResults parse_json(std::string_view text) {
    ParsedResults parsed;
    try {
        ojson doc = ojson::parse(text);
        if (doc.at("schema_version").get<int>() != kResultsSchemaVersion) {
            throw IoError("Unsupported results schema_version.");
        }
        for (const auto &j : doc.at("records")) {
            BenchmarkRecord r;
            r.width = j.at("width").get<int>();
            r.trial_index = j.at("trial").get<std::uint64_t>();
            r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
            r.su4_count = j.at("su4_count").get<std::uint64_t>();
            r.swap_count = j.at("swap_count").get<std::uint64_t>();
            r.ideal_hop = j.at("ideal_hop").get<double>();
            if (j.contains("sampled_hop")) {
                r.sampled_hop = j.at("sampled_hop").get<double>();
            }
            r.seed = j.at("seed").get<std::uint64_t>();
            r.threads = j.at("threads").get<int>();
            r.fusion = j.at("fusion").get<bool>();
            r.timestamp = j.at("timestamp").get<std::string>();
            parsed.records.push_back(std::move(r));
        }
        for (const auto &j : doc.at("decisions")) {
            QvDecision d;
            d.width = j.at("width").get<int>();
            d.mean_hop = j.at("mean_hop").get<double>();
            d.stderr_hop = j.at("stderr").get<double>();
            d.trials = j.at("trials").get<std::uint64_t>();
            d.passed = j.at("passed").get<bool>();
            d.quantum_volume = j.at("quantum_volume").get<std::uint64_t>();
            parsed.decisions.push_back(d);
        }
        for (const auto &j : doc.at("notices")) {
            parsed.notices.push_back(SweepNotice{
                parse_notice_kind(j.at("kind").get<std::string>()),
                j.at("width").get<int>(),
                j.at("trial").get<std::uint64_t>(),
                j.at("message").get<std::string>()});
        }
    } catch (const nlohmann::json::exception &e) {
        throw IoError(std::string("Malformed JSON results: ") + e.what());
    }
    return parsed;
}

}  // namespace

std::string format_results(
    std::span<const BenchmarkRecord> records,
    std::span<const QvDecision> decisions,
    OutputFormat format,
    std::span<const SweepNotice> notices) {
    if (format == OutputFormat::CSV) {
        return format_csv(records);
    }
    return format_json(records, decisions, notices);
}

void emit_results(
    std::span<const BenchmarkRecord> records,
    std::span<const QvDecision> decisions,
    OutputFormat format,
    const std::filesystem::path &path,
    std::span<const SweepNotice> notices) {
    write_text_file(path, format_results(records, decisions, format, notices));
}

ParsedResults parse_results(std::string_view text, OutputFormat format) {
    return format == OutputFormat::CSV ? parse_csv(text) : parse_json(text);
}

std::string format_suite_table(const SuiteTable &table, OutputFormat format) {
    if (format == OutputFormat::CSV) {
        std::string out;
        for (size_t i = 0; i < table.columns.size(); i++) {
            out += (i ? "," : "") + table.columns[i];
        }
        out += '\n';
        for (const auto &row : table.rows) {
            for (size_t i = 0; i < row.size(); i++) {
                out += (i ? "," : "") + full_precision(row[i]);
            }
            out += '\n';
        }
        return out;
    }
    ojson doc;
    doc["schema_version"] = kResultsSchemaVersion;
    doc["suite"] = table.suite;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    return doc.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("Cannot open " + path.string() + " for writing.");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
        throw IoError("Failed writing " + path.string() + ".");
    }
}

std::string scaling_svg(const ScalingReport &report) {
    constexpr double W = 640, H = 400, left = 70, right = 20, top = 20, bottom = 50;
    std::vector<std::pair<double, double>> pts;
    for (const auto &r : report.rows) {
        if (r.median_seconds > 0) {
            pts.emplace_back(r.width, std::log10(r.median_seconds));
        }
    }
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (pts.empty()) {
        svg << "</svg>\n";
        return svg.str();
    }
    auto [xmin_it, xmax_it] = std::minmax_element(pts.begin(), pts.end());
    double xmin = xmin_it->first, xmax = xmax_it->first;
    double ymin = std::floor(std::min_element(pts.begin(), pts.end(), [](auto &a, auto &b) { return a.second < b.second; })->second);
    double ymax = std::ceil(std::max_element(pts.begin(), pts.end(), [](auto &a, auto &b) { return a.second < b.second; })->second);
    if (xmax == xmin) {
        xmax = xmin + 1;
    }
    if (ymax == ymin) {
        ymax = ymin + 1;
    }
    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (W - left - right); };
    auto sy = [&](double y) { return top + (ymax - y) / (ymax - ymin) * (H - top - bottom); };

    svg << "<line x1=\"" << left << "\" y1=\"" << H - bottom << "\" x2=\"" << W - right << "\" y2=\"" << H - bottom
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << H - bottom
        << "\" stroke=\"black\"/>\n";
    for (int d = static_cast<int>(ymin); d <= static_cast<int>(ymax); d++) {
        svg << "<text x=\"" << left - 8 << "\" y=\"" << sy(d) + 4 << "\" font-size=\"11\" text-anchor=\"end\">1e" << d
            << " s</text>\n";
    }
    for (const auto &[x, y] : pts) {
        svg << "<text x=\"" << sx(x) << "\" y=\"" << H - bottom + 16 << "\" font-size=\"11\" text-anchor=\"middle\">"
            << x << "</text>\n";
    }
    svg << "<text x=\"" << (left + W - right) / 2 << "\" y=\"" << H - 10
        << "\" font-size=\"12\" text-anchor=\"middle\">qubits (width = depth)</text>\n";
    svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (const auto &[x, y] : pts) {
        svg << sx(x) << ',' << sy(y) << ' ';
    }
    svg << "\"/>\n";
    for (const auto &[x, y] : pts) {
        svg << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\"steelblue\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace qvsim
