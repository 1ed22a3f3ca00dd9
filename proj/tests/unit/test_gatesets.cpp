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

#include <doctest.h>

#include <numbers>
#include <set>
#include <sstream>

#include "gateid/errors.hpp"
#include "gateid/gatesets.hpp"
#include "gateid/numerics.hpp"

using namespace gateid;
using gatesets::Family;

namespace {

std::vector<GateSet> catalog() {
    return {
        gatesets::make_named_set(Family::PhasePoint, {.d = 2, .k = 5}),
        gatesets::make_named_set(Family::PhasePoint, {.d = 3, .k = 4}),
        gatesets::make_named_set(Family::Clock, {.d = 2, .k = 3}),
        gatesets::make_named_set(Family::Clock, {.d = 3, .k = 9}),
        gatesets::make_named_set(Family::ShiftMultiply, {.d = 3}),
        gatesets::make_named_set(Family::Permutation, {.d = 3}),
        gatesets::make_named_set(Family::Permutation, {.d = 4}),
        gatesets::make_named_set(Family::Grover, {.d = 3}),
        gatesets::make_named_set(Family::Grover, {.d = 4}),
        gatesets::make_named_set(Family::Pauli, {}),
        gatesets::make_named_set(Family::HadamardRotations, {.k = 3}),
    };
}

} // namespace

TEST_CASE("shift_multiply(3) has nine pairwise orthogonal gates") {
    const GateSet g = gatesets::make_named_set(Family::ShiftMultiply, {.d = 3});
    REQUIRE(g.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            const double expect = i == j ? 3.0 : 0.0;
            CHECK(std::abs(numerics::hs_inner(g.gates[i].matrix, g.gates[j].matrix) - expect) < 1e-10);
        }
    }
}

TEST_CASE("phase_point(5, 2) is diag(1, w^x)") {
    const GateSet g = gatesets::make_named_set(Family::PhasePoint, {.d = 2, .k = 5});
    REQUIRE(g.size() == 5);
    for (std::size_t x = 1; x <= 5; ++x) {
        const ComplexMatrix &u = g.gates[x - 1].matrix;
        CHECK(u(0, 0) == Complex(1.0));
        CHECK(std::abs(u(1, 1) - std::polar(1.0, 2 * std::numbers::pi * x / 5.0)) < 1e-15);
        CHECK(u(0, 1) == Complex(0.0));
        CHECK(u(1, 0) == Complex(0.0));
    }
}

TEST_CASE("pauli is the d = 2 shift-multiply family") {
    const GateSet g = gatesets::make_named_set(Family::Pauli, {});
    const GateSet sm = gatesets::make_named_set(Family::ShiftMultiply, {.d = 2});
    REQUIRE(g.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK((g.gates[i].matrix - sm.gates[i].matrix).norm() < 1e-15);
    }
    const Complex i1(0.0, 1.0);
    CHECK((g.gates[0].matrix - ComplexMatrix::Identity(2, 2)).norm() < 1e-15);
    CHECK((g.gates[1].matrix + gatesets::pauli_z()).norm() < 1e-15);
    CHECK((g.gates[2].matrix - gatesets::pauli_x()).norm() < 1e-15);
    CHECK((g.gates[3].matrix - i1 * gatesets::pauli_y()).norm() < 1e-15);
}

TEST_CASE("every catalog set validates cleanly") {
    const NumericConfig cfg;
    for (const auto &g : catalog()) {
        const auto r = gatesets::validate_gate_set(g, cfg);
        CHECK_MESSAGE(r.ok(), r.summary());
        CHECK(r.duplicates_up_to_phase.empty());
        CHECK(r.non_unitary.empty());
        CHECK(g.has_uniform_priors());
    }
}

TEST_CASE("grover(2) is Z and -Z, equal up to a global phase") {
    const GateSet g = gatesets::make_named_set(Family::Grover, {.d = 2});
    REQUIRE(g.size() == 2);
    CHECK((g.gates[0].matrix + g.gates[1].matrix).norm() == 0.0);
    const auto r = gatesets::validate_gate_set(g, NumericConfig{});
    CHECK(r.duplicates_up_to_phase.size() == 1);
    CHECK_FALSE(r.ok());
}

TEST_CASE("clock gates commute") {
    const GateSet g = gatesets::make_named_set(Family::Clock, {.d = 3, .k = 5});
    for (const auto &a : g.gates) {
        for (const auto &b : g.gates) {
            CHECK((a.matrix * b.matrix - b.matrix * a.matrix).norm() <= 1e-12);
        }
    }
}

TEST_CASE("shift_multiply traces are d on the diagonal and zero elsewhere") {
    for (std::size_t d = 2; d <= 5; ++d) {
        const GateSet g = gatesets::make_named_set(Family::ShiftMultiply, {.d = d});
        REQUIRE(g.size() == d * d);
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = 0; j < g.size(); ++j) {
                const double tr = std::abs((g.gates[i].matrix.adjoint() * g.gates[j].matrix).trace());
                CHECK(std::abs(tr - (i == j ? static_cast<double>(d) : 0.0)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("permutation matrices have one unit entry per row and column") {
    for (std::size_t d = 2; d <= 5; ++d) {
        const GateSet g = gatesets::make_named_set(Family::Permutation, {.d = d});
        std::size_t fact = 1;
        for (std::size_t k = 2; k <= d; ++k) fact *= k;
        REQUIRE(g.size() == fact);
        for (const auto &gate : g.gates) {
            const ComplexMatrix &u = gate.matrix;
            for (std::size_t r = 0; r < d; ++r) {
                int row_ones = 0;
                int col_ones = 0;
                for (std::size_t c = 0; c < d; ++c) {
                    CHECK((u(r, c) == Complex(0.0) || u(r, c) == Complex(1.0)));
                    row_ones += u(r, c) == Complex(1.0);
                    col_ones += u(c, r) == Complex(1.0);
                }
                CHECK(row_ones == 1);
                CHECK(col_ones == 1);
            }
        }
    }
}

TEST_CASE("family parameter ranges are enforced") {
    CHECK_THROWS_AS((void)gatesets::make_named_set(Family::PhasePoint, {.d = 2, .k = 1}), InvalidArgument);
    CHECK_THROWS_AS((void)gatesets::make_named_set(Family::Clock, {.d = 1, .k = 3}), InvalidArgument);
    CHECK_THROWS_AS((void)gatesets::make_named_set(Family::Permutation, {.d = 7}), InvalidArgument);
    CHECK_THROWS_AS((void)gatesets::parse_family("tetris"), InvalidArgument);
    for (Family f : gatesets::all_families()) {
        CHECK(gatesets::parse_family(gatesets::family_name(f)) == f);
    }
}

TEST_CASE("validation flags gates equal up to a global phase") {
    const NumericConfig cfg;
    const GateSet g = gatesets::from_matrices(
        {{"I", ComplexMatrix::Identity(2, 2)},
         {"phased", std::polar(1.0, std::numbers::pi / 7) * ComplexMatrix::Identity(2, 2)}});
    const auto r = gatesets::validate_gate_set(g, cfg);
    CHECK_FALSE(r.ok());
    REQUIRE(r.duplicates_up_to_phase.size() == 1);
    CHECK(r.duplicates_up_to_phase[0].first == 0);
    CHECK(r.duplicates_up_to_phase[0].second == 1);
    CHECK_THROWS_AS(gatesets::require_valid(g, cfg), ValidationError);
}

TEST_CASE("validation flags non-unitary matrices") {
    const NumericConfig cfg;
    ComplexMatrix bad(2, 2);
    bad << std::sqrt(2.0), 0.0, 0.0, 0.0;
    const GateSet g = gatesets::from_matrices({{"I", ComplexMatrix::Identity(2, 2)}, {"bad", bad}});
    const auto r = gatesets::validate_gate_set(g, cfg);
    CHECK_FALSE(r.ok());
    REQUIRE(r.non_unitary.size() == 1);
    CHECK(r.non_unitary[0] == 1);
    CHECK(r.unitarity_residuals[1] > 1.0);
    CHECK(r.unitarity_residuals[0] == 0.0);
}

TEST_CASE("validation checks labels, gate count and priors") {
    const NumericConfig cfg;
    GateSet g = gatesets::from_matrices({{"a", ComplexMatrix::Identity(2, 2)}, {"a", gatesets::pauli_x()}});
    CHECK_FALSE(gatesets::validate_gate_set(g, cfg).labels_unique);

    GateSet one = gatesets::from_matrices({{"a", ComplexMatrix::Identity(2, 2)}});
    CHECK_FALSE(gatesets::validate_gate_set(one, cfg).enough_gates);

    GateSet pri = gatesets::make_named_set(Family::Pauli, {});
    pri.priors = {0.5, 0.5, 0.1, 0.0};
    CHECK_FALSE(gatesets::validate_gate_set(pri, cfg).priors_normalized);
    pri.priors = {0.6, 0.6, -0.2, 0.0};
    CHECK_FALSE(gatesets::validate_gate_set(pri, cfg).priors_nonnegative);
    pri.priors = {0.5, 0.5};
    CHECK_FALSE(gatesets::validate_gate_set(pri, cfg).priors_aligned);
}

TEST_CASE("a serialized pauli set loads back identically") {
    const NumericConfig cfg;
    const GateSet g = gatesets::make_named_set(Family::Pauli, {});
    const std::string text = gatesets::serialize_gate_set(g);
    const GateSet back = gatesets::parse_gate_set(text, cfg);
    REQUIRE(back.size() == g.size());
    CHECK(back.dimension == 2);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(back.gates[i].label == g.gates[i].label);
        CHECK(back.gates[i].matrix == g.gates[i].matrix);
        CHECK(back.priors[i] == g.priors[i]);
    }
    CHECK(gatesets::serialize_gate_set(back) == text);
}

TEST_CASE("round trip is bit-exact for irrational entries") {
    const NumericConfig cfg;
    for (const auto &g : catalog()) {
        const std::string text = gatesets::serialize_gate_set(g);
        std::istringstream in(text);
        const GateSet back = gatesets::load_gate_set(in, cfg);
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(back.gates[i].matrix == g.gates[i].matrix);
        }
        CHECK(gatesets::serialize_gate_set(back) == text);
    }
}

TEST_CASE("loader rejects malformed documents") {
    const NumericConfig cfg;
    const std::string unnormalized = R"({"dimension": 1, "gates": [
        {"label": "a", "matrix": [[[1, 0]]]},
        {"label": "b", "matrix": [[[0, 1]]]},
        {"label": "c", "matrix": [[[-1, 0]]]}], "priors": [0.5, 0.5, 0.1]})";
    CHECK_THROWS_AS((void)gatesets::parse_gate_set(unnormalized, cfg), ValidationError);

    const std::string no_dim = R"({"gates": [{"label": "a", "matrix": [[[1, 0]]]}]})";
    CHECK_THROWS_AS((void)gatesets::parse_gate_set(no_dim, cfg), InvalidArgument);

    const std::string bad_shape = R"({"dimension": 2, "gates": [
        {"label": "a", "matrix": [[[1, 0]]]}, {"label": "b", "matrix": [[[1, 0]]]}]})";
    CHECK_THROWS_AS((void)gatesets::parse_gate_set(bad_shape, cfg), InvalidArgument);

    CHECK_THROWS_AS((void)gatesets::parse_gate_set("{not json", cfg), InvalidArgument);
    CHECK_THROWS_AS((void)gatesets::load_gate_set_file("/nonexistent/gates.json", cfg), InvalidArgument);
}

TEST_CASE("loader accepts explicit priors and defaults to uniform") {
    const NumericConfig cfg;
    const std::string text = R"({"dimension": 2, "gates": [
        {"label": "I", "matrix": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]},
        {"label": "X", "matrix": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]}], "priors": [0.25, 0.75]})";
    const GateSet g = gatesets::parse_gate_set(text, cfg);
    CHECK(g.priors == std::vector<double>{0.25, 0.75});
    CHECK(g.max_prior() == 0.75);
    CHECK(g.find("X") == std::optional<std::size_t>(1));
    CHECK_FALSE(g.find("Y").has_value());
}

TEST_CASE("format_real keeps 17 significant digits") {
    CHECK(gatesets::format_real(0.1) == "0.10000000000000001");
    CHECK(gatesets::format_real(1.0) == "1");
    CHECK(std::stod(gatesets::format_real(1.0 / 3.0)) == 1.0 / 3.0);
}
