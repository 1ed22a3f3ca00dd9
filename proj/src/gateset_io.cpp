// Copyright 2026 The gateid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gateid/errors.hpp"
#include "gateid/gatesets.hpp"

namespace gateid::gatesets {

namespace {

using nlohmann::json;

double as_real(const json &j, const char *what) {
    if (!j.is_number()) {
        throw InvalidArgument(std::string("gate-set schema: ") + what +
                              " must be a number");
    }
    return j.get<double>();
}

ComplexMatrix parse_matrix(const json &j, std::size_t d, const std::string &label) {
    if (!j.is_array() || j.size() != d) {
        throw InvalidArgument("gate '" + label + "': matrix must have " +
                              std::to_string(d) + " rows");
    }
    ComplexMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        const json &row = j[r];
        if (!row.is_array() || row.size() != d) {
            throw InvalidArgument("gate '" + label + "': row " + std::to_string(r) +
                                  " must have " + std::to_string(d) + " entries");
        }
        for (std::size_t c = 0; c < d; ++c) {
            const json &z = row[c];
            if (!z.is_array() || z.size() != 2) {
                throw InvalidArgument("gate '" + label +
                                      "': entries must be [re, im] pairs");
            }
            m(r, c) = Complex(as_real(z[0], "re"), as_real(z[1], "im"));
        }
    }
    return m;
}

GateSet from_json(const json &doc) {
    if (!doc.is_object()) {
        throw InvalidArgument("gate-set schema: top level must be an object");
    }
    if (!doc.contains("dimension")) {
        throw InvalidArgument("gate-set schema: missing \"dimension\"");
    }
    if (!doc.contains("gates")) {
        throw InvalidArgument("gate-set schema: missing \"gates\"");
    }
    const json &dim = doc["dimension"];
    if (!dim.is_number_integer() || dim.get<long long>() < 1) {
        throw InvalidArgument("gate-set schema: \"dimension\" must be a positive integer");
    }
    GateSet g;
    g.dimension = dim.get<std::size_t>();
    const json &gates = doc["gates"];
    if (!gates.is_array()) {
        throw InvalidArgument("gate-set schema: \"gates\" must be an array");
    }
    for (const json &entry : gates) {
        if (!entry.is_object() || !entry.contains("label") || !entry.contains("matrix") ||
            !entry["label"].is_string()) {
            throw InvalidArgument("gate-set schema: each gate needs a string \"label\" and a \"matrix\"");
        }
        const auto label = entry["label"].get<std::string>();
        g.gates.push_back({label, parse_matrix(entry["matrix"], g.dimension, label)});
    }
    if (doc.contains("priors")) {
        const json &pri = doc["priors"];
        if (!pri.is_array()) {
            throw InvalidArgument("gate-set schema: \"priors\" must be an array");
        }
        for (const json &p : pri) {
            g.priors.push_back(as_real(p, "prior"));
        }
    } else if (!g.gates.empty()) {
        g.priors.assign(g.gates.size(), 1.0 / static_cast<double>(g.gates.size()));
    }
    return g;
}

} // namespace

std::string format_real(double v) {
    if (v == 0.0 && std::signbit(v)) {
        return "-0.0";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

GateSet parse_gate_set(std::string_view text, const NumericConfig &cfg) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidArgument(std::string("malformed gate-set JSON: ") + e.what());
    }
    GateSet g = from_json(doc);
    require_valid(g, cfg);
    return g;
}

GateSet load_gate_set(std::istream &in, const NumericConfig &cfg) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gate_set(buf.str(), cfg);
}

GateSet load_gate_set_file(const std::string &path, const NumericConfig &cfg) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open gate-set file '" + path + "'");
    }
    return load_gate_set(in, cfg);
}

void save_gate_set(std::ostream &out, const GateSet &g) {
    out << "{\n  \"dimension\": " << g.dimension << ",\n  \"gates\": [";
    for (std::size_t k = 0; k < g.gates.size(); ++k) {
        const Gate &gate = g.gates[k];
        out << (k == 0 ? "\n" : ",\n") << "    {\"label\": " << nlohmann::json(gate.label).dump()
            << ", \"matrix\": [";
        for (Eigen::Index r = 0; r < gate.matrix.rows(); ++r) {
            out << (r == 0 ? "" : ", ") << "[";
            for (Eigen::Index c = 0; c < gate.matrix.cols(); ++c) {
                const Complex z = gate.matrix(r, c);
                out << (c == 0 ? "" : ", ") << "[" << format_real(z.real()) << ", "
                    << format_real(z.imag()) << "]";
            }
            out << "]";
        }
        out << "]}";
    }
    out << "\n  ],\n  \"priors\": [";
    for (std::size_t k = 0; k < g.priors.size(); ++k) {
        out << (k == 0 ? "" : ", ") << format_real(g.priors[k]);
    }
    out << "]\n}\n";
}

std::string serialize_gate_set(const GateSet &g) {
    std::ostringstream os;
    save_gate_set(os, g);
    return os.str();
}

} // namespace gateid::gatesets
