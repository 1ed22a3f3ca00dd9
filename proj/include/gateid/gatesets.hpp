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

/**
 * @file
 * Labeled finite gate sets: the named families, validation against the
 * distinguishability premise, and the JSON file format.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gateid/numerics.hpp"

namespace gateid {

struct Gate {
    std::string label;
    ComplexMatrix matrix;
};

/// Ordered labeled unitaries on C^d with prior probabilities.
struct GateSet {
    std::size_t dimension = 0;
    std::vector<Gate> gates;
    std::vector<double> priors;

    [[nodiscard]] std::size_t size() const { return gates.size(); }
    [[nodiscard]] bool has_uniform_priors(double tol = 1e-12) const;
    [[nodiscard]] double max_prior() const;
    [[nodiscard]] std::vector<std::string> labels() const;
    /// Index of the gate with the given label, if any.
    [[nodiscard]] std::optional<std::size_t> find(std::string_view label) const;
};

namespace gatesets {

enum class Family {
    PhasePoint,        ///< omega^x |1><1| + (I - |1><1|), omega = e^{2 pi i/K}
    Clock,             ///< sum_y omega^{xy} |y><y|, omega = e^{2 pi i/K}
    ShiftMultiply,     ///< S^p M^q over Z_d x Z_d
    Permutation,       ///< all of S_d
    Grover,            ///< I - 2|x><x|
    Pauli,             ///< shift_multiply(2)
    HadamardRotations, ///< {H} plus K rotations cos(2 pi k/K) I + i sin(2 pi k/K) X
};

struct FamilyParams {
    std::size_t d = 2;
    std::size_t k = 2;
};

[[nodiscard]] std::string_view family_name(Family f);
[[nodiscard]] Family parse_family(std::string_view name);
[[nodiscard]] std::vector<Family> all_families();
/// Which of d and K the family reads, e.g. "K, d".
[[nodiscard]] std::string_view family_parameters(Family f);
/// One-line matrix definition.
[[nodiscard]] std::string_view family_description(Family f);

/**
 * Builds a named family with uniform priors. Parameter ranges: K >= 2,
 * d >= 2, permutation restricted to d <= 6. Parameters a family does not
 * use are ignored.
 */
[[nodiscard]] GateSet make_named_set(Family family, const FamilyParams &params);

/// Gate set from explicit matrices with uniform priors.
[[nodiscard]] GateSet from_matrices(std::vector<Gate> gates);

/// Shift S|k> = |k+1 mod d> (0-based array indices).
[[nodiscard]] ComplexMatrix shift_operator(std::size_t d);
/// Multiply M = sum_k e^{2 pi i k/d}|k><k| with 1-based k on array index k-1.
[[nodiscard]] ComplexMatrix multiply_operator(std::size_t d);
[[nodiscard]] ComplexMatrix hadamard();
[[nodiscard]] ComplexMatrix pauli_x();
[[nodiscard]] ComplexMatrix pauli_y();
[[nodiscard]] ComplexMatrix pauli_z();

struct DuplicatePair {
    std::size_t first = 0;
    std::size_t second = 0;
    double residual = 0.0; ///< ||U_x^dag U_y - tau I||_F with tau the best phase
};

struct ValidationReport {
    bool shape_ok = true;
    bool enough_gates = true;
    bool labels_unique = true;
    bool finite = true;
    std::vector<double> unitarity_residuals;
    std::vector<std::size_t> non_unitary;
    std::vector<DuplicatePair> duplicates_up_to_phase;
    double prior_sum = 1.0;
    bool priors_nonnegative = true;
    bool priors_normalized = true;
    bool priors_aligned = true;
    std::vector<std::string> messages;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] std::string summary() const;
};

/// Checks every GateSet invariant and reports all failures.
[[nodiscard]] ValidationReport validate_gate_set(const GateSet &g,
                                                 const NumericConfig &cfg);

/// Throws ValidationError carrying the report summary unless `g` is valid.
void require_valid(const GateSet &g, const NumericConfig &cfg);

/**
 * Reads the gate-set JSON schema
 * {"dimension": d, "gates": [{"label": s, "matrix": [[[re, im], ...]]}],
 *  "priors": [...]} (priors optional). Schema problems raise
 * InvalidArgument, invariant violations ValidationError.
 */
[[nodiscard]] GateSet load_gate_set(std::istream &in, const NumericConfig &cfg);
[[nodiscard]] GateSet load_gate_set_file(const std::string &path,
                                         const NumericConfig &cfg);
[[nodiscard]] GateSet parse_gate_set(std::string_view json,
                                     const NumericConfig &cfg);

/// Writes the same schema with 17 significant digits per real number.
void save_gate_set(std::ostream &out, const GateSet &g);
[[nodiscard]] std::string serialize_gate_set(const GateSet &g);

/// Formats a double with 17 significant digits.
[[nodiscard]] std::string format_real(double v);

} // namespace gatesets
} // namespace gateid
