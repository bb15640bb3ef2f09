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

#include "qvsim/circuit_io.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace qvsim {

namespace {

using nlohmann::json;

double parse_hex_double(const json &j) {
    if (!j.is_string()) {
        throw CircuitFormatError("Matrix entries must be hex-float strings.");
    }
    const std::string &s = j.get_ref<const std::string &>();
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw CircuitFormatError("Unparseable matrix entry '" + s + "'.");
    }
    return v;
}

const json &require(const json &obj, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw CircuitFormatError(std::string("Missing field '") + key + "'.");
    }
    return *it;
}

json op_to_json(const GateOp &g, int layer) {
    json matrix = json::array();
    auto m = g.matrix();
    for (int r = 0; r < g.dim(); r++) {
        json row = json::array();
        for (int c = 0; c < g.dim(); c++) {
            const Complex &z = m[r * g.dim() + c];
            row.push_back(json::array({hex_double(z.real()), hex_double(z.imag())}));
        }
        matrix.push_back(std::move(row));
    }
    json targets = json::array();
    for (int t : g.targets()) {
        targets.push_back(t);
    }
    return json{
        {"kind", std::string(gate_kind_name(g.kind()))},
        {"layer", layer},
        {"targets", std::move(targets)},
        {"matrix", std::move(matrix)}};
}

GateOp op_from_json(const json &j, int width) {
    GateKind kind;
    try {
        kind = parse_gate_kind(require(j, "kind").get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw CircuitFormatError(e.what());
    }
    std::vector<int> targets = require(j, "targets").get<std::vector<int>>();
    for (int t : targets) {
        if (t < 0 || t >= width) {
            throw CircuitFormatError("Op target " + std::to_string(t) + " outside a width-" + std::to_string(width) + " register.");
        }
    }
    const json &rows = require(j, "matrix");
    if (!rows.is_array()) {
        throw CircuitFormatError("Op matrix must be an array of rows.");
    }
    size_t dim = rows.size();
    std::vector<Complex> entries;
    for (const json &row : rows) {
        if (!row.is_array() || row.size() != dim) {
            throw CircuitFormatError("Op matrix must be square.");
        }
        for (const json &z : row) {
            if (!z.is_array() || z.size() != 2) {
                throw CircuitFormatError("Complex entries must be [re, im] pairs.");
            }
            entries.emplace_back(parse_hex_double(z[0]), parse_hex_double(z[1]));
        }
    }
    size_t expected_dim = kind == GateKind::GENERIC1Q ? 2 : 4;
    if (dim != expected_dim) {
        throw CircuitFormatError(
            std::string(gate_kind_name(kind)) + " op needs a " + std::to_string(expected_dim) + "x" +
            std::to_string(expected_dim) + " matrix, got " + std::to_string(dim) + "x" + std::to_string(dim) + ".");
    }
    try {
        return GateOp::from_parts(kind, targets, entries);
    } catch (const std::invalid_argument &e) {
        throw CircuitFormatError(e.what());
    }
}

}  // namespace

std::string hex_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%a", x);
    return buf;
}

std::string serialize_circuit(const QvCircuit &circuit) {
    // Which layer each flattened op came from: per layer its swaps, then its
    // SU4 gates, each possibly trailed by non-SU4 ops such as noise Paulis.
    std::vector<int> op_layer;
    op_layer.reserve(circuit.flattened_ops.size());
    const auto &ops = circuit.flattened_ops;
    size_t pos = 0;
    for (size_t layer = 0; layer < circuit.layers.size(); layer++) {
        const QvLayer &l = circuit.layers[layer];
        for (size_t k = 0; k < l.swaps.size(); k++, pos++) {
            if (pos >= ops.size() || ops[pos].kind() != GateKind::SWAP) {
                throw std::logic_error("Circuit op list does not follow its layer structure.");
            }
            op_layer.push_back(static_cast<int>(layer));
        }
        for (size_t k = 0; k < l.su4_gates.size(); k++) {
            if (pos >= ops.size() || ops[pos].kind() != GateKind::SU4) {
                throw std::logic_error("Circuit op list does not follow its layer structure.");
            }
            op_layer.push_back(static_cast<int>(layer));
            pos++;
            while (pos < ops.size() && ops[pos].kind() != GateKind::SU4 && ops[pos].kind() != GateKind::SWAP) {
                op_layer.push_back(static_cast<int>(layer));
                pos++;
            }
        }
    }
    if (pos != ops.size()) {
        throw std::logic_error("Circuit op list has ops outside its layers.");
    }

    std::ostringstream out;
    out << "{\n";
    out << "\"format_version\": " << kCircuitFormatVersion << ",\n";
    out << "\"width\": " << circuit.width << ",\n";
    out << "\"master_seed\": " << circuit.master_seed << ",\n";
    out << "\"trial_index\": " << circuit.trial_index << ",\n";
    out << "\"permutation_mode\": "
        << (circuit.permutation_mode == PermutationMode::SwapGates ? "\"swap_gates\"" : "\"relabel\"") << ",\n";
    out << "\"layers\": [";
    for (size_t i = 0; i < circuit.layers.size(); i++) {
        out << (i ? ",\n" : "\n") << json{{"permutation", circuit.layers[i].permutation.mapping()}}.dump();
    }
    out << "\n],\n";
    out << "\"ops\": [";
    for (size_t i = 0; i < circuit.flattened_ops.size(); i++) {
        out << (i ? ",\n" : "\n") << op_to_json(circuit.flattened_ops[i], op_layer[i]).dump();
    }
    out << "\n]\n}\n";
    return out.str();
}

QvCircuit deserialize_circuit(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw CircuitFormatError(std::string("Malformed circuit document: ") + e.what());
    }
    try {
        if (!doc.is_object()) {
            throw CircuitFormatError("Circuit document must be a JSON object.");
        }
        int version = require(doc, "format_version").get<int>();
        if (version != kCircuitFormatVersion) {
            throw CircuitFormatError("Unsupported circuit format_version " + std::to_string(version) + ".");
        }
        QvCircuit c;
        c.width = require(doc, "width").get<int>();
        if (c.width < 1) {
            throw CircuitFormatError("Circuit width must be positive.");
        }
        c.master_seed = require(doc, "master_seed").get<std::uint64_t>();
        c.trial_index = require(doc, "trial_index").get<std::uint64_t>();
        std::string mode = require(doc, "permutation_mode").get<std::string>();
        if (mode == "swap_gates") {
            c.permutation_mode = PermutationMode::SwapGates;
        } else if (mode == "relabel") {
            c.permutation_mode = PermutationMode::Relabel;
        } else {
            throw CircuitFormatError("Unknown permutation_mode '" + mode + "'.");
        }
        for (const json &l : require(doc, "layers")) {
            std::vector<int> mapping = require(l, "permutation").get<std::vector<int>>();
            if (static_cast<int>(mapping.size()) != c.width) {
                throw CircuitFormatError("Layer permutation length differs from the circuit width.");
            }
            try {
                c.layers.push_back(QvLayer{QubitPermutation(std::move(mapping)), {}, {}});
            } catch (const std::invalid_argument &e) {
                throw CircuitFormatError(e.what());
            }
        }
        for (const json &j : require(doc, "ops")) {
            GateOp g = op_from_json(j, c.width);
            int layer = require(j, "layer").get<int>();
            if (layer < 0 || static_cast<size_t>(layer) >= c.layers.size()) {
                throw CircuitFormatError("Op refers to layer " + std::to_string(layer) + ", which does not exist.");
            }
            auto t = g.targets();
            if (g.kind() == GateKind::SWAP) {
                c.layers[layer].swaps.emplace_back(t[0], t[1]);
            } else if (g.kind() == GateKind::SU4) {
                c.layers[layer].su4_gates.push_back(g);
            }
            c.flattened_ops.push_back(std::move(g));
        }
        if (c.permutation_mode == PermutationMode::SwapGates) {
            for (const QvLayer &l : c.layers) {
                std::vector<int> content(c.width);
                std::iota(content.begin(), content.end(), 0);
                for (auto [a, b] : l.swaps) {
                    std::swap(content[a], content[b]);
                }
                for (int w = 0; w < c.width; w++) {
                    if (l.permutation[content[w]] != w) {
                        throw CircuitFormatError("A layer's SWAP gates do not realize its permutation.");
                    }
                }
            }
        }
        return c;
    } catch (const json::exception &e) {
        throw CircuitFormatError(std::string("Malformed circuit document: ") + e.what());
    }
}

void write_circuit_file(const QvCircuit &circuit, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    out << serialize_circuit(circuit);
    if (!out) {
        throw std::runtime_error("Failed to write circuit file " + path.string() + ".");
    }
}

QvCircuit read_circuit_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("Failed to open circuit file " + path.string() + ".");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return deserialize_circuit(buf.str());
}

}  // namespace qvsim
