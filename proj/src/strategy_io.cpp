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

#include <string>

#include <json.hpp>

#include "gateid/discriminate.hpp"
#include "gateid/errors.hpp"

namespace gateid::discriminate {

namespace {

using Json = nlohmann::ordered_json;

Json complex_json(const Complex &z) { return Json::array({z.real(), z.imag()}); }

Json matrix_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_json(const ComplexVector &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_json(v(i)));
    }
    return out;
}

Complex complex_from(const Json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidArgument("complex entries are [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector vector_from(const Json &j) {
    if (!j.is_array()) {
        throw InvalidArgument("vector must be an array of [re, im] pairs");
    }
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_from(j[i]);
    }
    return v;
}

ComplexMatrix matrix_from(const Json &j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) {
        throw InvalidArgument("matrix must be a nonempty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json &row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw InvalidArgument("matrix rows have different lengths");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(i, c) = complex_from(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

Json povm_json(const Povm &p) {
    Json outcomes = Json::array();
    for (std::size_t i = 0; i < p.ops.size(); ++i) {
        outcomes.push_back({{"label", p.labels[i]}, {"operator", matrix_json(p.ops[i])}});
    }
    return {{"outcomes", outcomes}};
}

Povm povm_from(const Json &j) {
    if (!j.is_object() || !j.contains("outcomes") || !j["outcomes"].is_array()) {
        throw InvalidArgument("POVM schema: need array \"outcomes\"");
    }
    Povm p;
    for (const Json &o : j["outcomes"]) {
        if (!o.contains("label") || !o["label"].is_string() || !o.contains("operator")) {
            throw InvalidArgument("POVM schema: each outcome needs \"label\" and \"operator\"");
        }
        p.labels.push_back(o["label"].get<std::string>());
        p.ops.push_back(matrix_from(o["operator"]));
    }
    return p;
}

Json parse_json(std::string_view text, const char *what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw InvalidArgument(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

} // namespace

std::string serialize_povm(const Povm &p) { return povm_json(p).dump(2); }

Povm parse_povm(std::string_view json) { return povm_from(parse_json(json, "POVM")); }

std::string serialize_strategy(const Strategy &s) {
    Json j;
    j["kind"] = "parallel";
    j["queries"] = s.queries;
    j["ancilla_dim"] = s.ancilla_dim;
    j["input"] = vector_json(s.input);
    j["povm"] = povm_json(s.povm);
    return j.dump(2);
}

Strategy parse_strategy(std::string_view json) {
    const Json j = parse_json(json, "strategy");
    if (!j.is_object() || !j.contains("queries") || !j.contains("ancilla_dim") ||
        !j.contains("input") || !j.contains("povm")) {
        throw InvalidArgument(
            "strategy schema: need \"queries\", \"ancilla_dim\", \"input\", \"povm\"");
    }
    if (j.contains("kind") && j["kind"] != "parallel") {
        throw InvalidArgument("only parallel strategies are supported");
    }
    Strategy s;
    s.queries = j["queries"].get<std::size_t>();
    s.ancilla_dim = j["ancilla_dim"].get<std::size_t>();
    s.input = vector_from(j["input"]);
    s.povm = povm_from(j["povm"]);
    return s;
}

std::string serialize_eval(const EvalResult &e) {
    Json j;
    j["gate_labels"] = e.gate_labels;
    j["outcome_labels"] = e.outcome_labels;
    Json table = Json::array();
    for (Eigen::Index x = 0; x < e.table.rows(); ++x) {
        Json row = Json::array();
        for (Eigen::Index y = 0; y < e.table.cols(); ++y) {
            row.push_back(e.table(x, y));
        }
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    j["conditional_success"] =
        e.conditional_success ? Json(*e.conditional_success) : Json(nullptr);
    j["all_inconclusive"] = e.all_inconclusive();
    j["success_prob"] = e.success_prob;
    j["error_prob"] = e.error_prob;
    j["inconclusive_prob"] = e.inconclusive_prob;
    return j.dump(2);
}

} // namespace gateid::discriminate
