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
 * Group structure of gate sets: closure tables, generalized t-design
 * checks, Schur-Weyl multiplicities from the hook-length formula, and
 * multiplicities from characters.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gateid/gatesets.hpp"
#include "gateid/numerics.hpp"
#include "gateid/rational.hpp"

namespace gateid::groups {

/// Multiplication table on gate indices: U_x U_y = phase * U_{x*y}.
struct GroupTable {
    std::size_t order = 0;
    std::vector<std::size_t> mult; ///< row-major, order x order
    std::size_t identity_index = 0;
    /// Closure needed a nontrivial phase somewhere. The multiplier itself is
    /// not recorded.
    bool projective = false;

    [[nodiscard]] std::size_t product(std::size_t x, std::size_t y) const {
        return mult[x * order + y];
    }
    [[nodiscard]] std::size_t inverse(std::size_t x) const;
    [[nodiscard]] std::size_t element_order(std::size_t x) const;
    [[nodiscard]] bool is_abelian() const;
    /// Associativity, two-sided identity, and the Latin-square property.
    [[nodiscard]] bool satisfies_axioms() const;
};

struct ClosureFailure {
    std::size_t first = 0;  ///< index of the left factor
    std::size_t second = 0; ///< index of the right factor
    std::string message;
};

using ClosureResult = std::variant<GroupTable, ClosureFailure>;

/**
 * Finds, for each ordered pair (x, y), the gate z with U_x U_y = U_z, or
 * U_x U_y = e^{i phi} U_z when `up_to_phase` is set. Returns the first
 * unmatched pair otherwise.
 */
[[nodiscard]] ClosureResult closure_table(const GateSet &g, bool up_to_phase,
                                          const NumericConfig &cfg);

/**
 * Phases w(x, y) with U_x U_y = w(x, y) U_{xy}, row-major like `mult`. All
 * ones for an ordinary representation.
 */
[[nodiscard]] std::vector<Complex> multipliers(const GateSet &g, const GroupTable &table);

/// True when every w(x, y)^n is 1 within `tol`, so U^{(x)n} is an ordinary
/// representation of the table.
[[nodiscard]] bool multiplier_power_trivial(const std::vector<Complex> &w, std::size_t n,
                                            double tol = 1e-9);

struct DesignCheckResult {
    std::size_t t = 0;
    double residual = 0.0; ///< Frobenius norm of the twirl difference
    bool verdict = false;  ///< residual <= kDesignTolerance
};

inline constexpr double kDesignTolerance = 1e-8;

/// sum_x p_x (U_x (x) conj(U_x))^{(x)t}.
[[nodiscard]] ComplexMatrix twirl_operator(const GateSet &g, std::size_t t,
                                           std::size_t cap);

/// Compares the t-fold twirl of `g` against the uniform twirl of `reference`.
[[nodiscard]] DesignCheckResult design_check(const GateSet &g,
                                             const GateSet &reference,
                                             std::size_t t,
                                             const NumericConfig &cfg);

/// Compares the one-fold twirl against the Haar value |I>><<I| / d.
[[nodiscard]] DesignCheckResult design_check_haar_t1(const GateSet &g,
                                                     const NumericConfig &cfg);

// --- Young diagrams -------------------------------------------------------

struct YoungDiagram {
    std::vector<std::size_t> rows; ///< weakly decreasing, no zero rows

    [[nodiscard]] std::size_t boxes() const;
    [[nodiscard]] std::string str() const;
    friend bool operator==(const YoungDiagram &, const YoungDiagram &) = default;
};

/// Partitions of n with at most max_rows rows, lexicographically decreasing.
[[nodiscard]] std::vector<YoungDiagram> partitions(std::size_t n,
                                                   std::size_t max_rows);

/// Hook length of every box, row by row.
[[nodiscard]] std::vector<std::size_t> hook_lengths(const YoungDiagram &shape);

/// Dimension of the U(d) irrep: prod (d + j - i) / prod hooks.
[[nodiscard]] BigInt unitary_irrep_dim(const YoungDiagram &shape, std::size_t d);

/// Dimension of the S_N irrep, i.e. the multiplicity in (C^d)^{(x)N}: N!/prod hooks.
[[nodiscard]] BigInt symmetric_irrep_dim(const YoungDiagram &shape);

struct YoungIrrep {
    YoungDiagram shape;
    BigInt dim;  ///< d_mu
    BigInt mult; ///< m_mu
};

struct YoungDecomposition {
    std::vector<YoungIrrep> irreps;
    BigInt ancilla_bound; ///< max_mu ceil(d_mu / m_mu)
};

inline constexpr std::size_t kMaxYoungBoxes = 12;

/// Irreps of U -> U^{(x)N} for U in U(d). Requires 1 <= N <= 12, d >= 2.
[[nodiscard]] YoungDecomposition young_decomposition(std::size_t n, std::size_t d);

struct ExtraBlock {
    std::size_t queries = 0;    ///< M = d * l
    std::size_t row_length = 0; ///< l
    BigInt multiplicity;        ///< m of the d x l rectangle
};

/**
 * Smallest M = d * l whose rectangular diagram (l, ..., l) with d rows has
 * multiplicity at least d_A. Searches l <= 64.
 */
[[nodiscard]] ExtraBlock min_extra_block_size(std::size_t d, std::uint64_t d_a);

// --- Characters -----------------------------------------------------------

struct Character {
    std::string id;
    std::vector<Complex> values; ///< indexed like the gates of the group set
};

struct CharacterTable {
    std::size_t group_order = 0;
    std::vector<Character> characters;
};

/// {"group_order": n, "characters": [{"id": s, "values": [[re, im], ...]}]}
[[nodiscard]] CharacterTable parse_character_table(std::string_view json);
[[nodiscard]] CharacterTable load_character_table_file(const std::string &path);
[[nodiscard]] std::string serialize_character_table(const CharacterTable &t);

/**
 * All one-dimensional characters of an abelian table, found by assigning
 * roots of unity to a generating set and keeping the homomorphisms.
 * Throws InvalidArgument for non-abelian tables.
 */
[[nodiscard]] CharacterTable abelian_characters(const GroupTable &table);

struct CharacterMultiplicity {
    std::string id;
    double irrep_dim = 0.0;          ///< Re chi(e)
    Complex value;                    ///< (1/|G|) sum_g conj(chi(g)) Tr(U_g)^N
    long long rounded = 0;            ///< nearest integer to Re value
    double distance_to_integer = 0.0; ///< |value - rounded|
    bool consistent = false;          ///< within 1e-6 of a nonnegative integer
};

inline constexpr double kMultiplicityTolerance = 1e-6;

[[nodiscard]] CharacterMultiplicity
multiplicity_by_characters(const GateSet &group, const GroupTable &table,
                           const Character &character, std::size_t n);

struct CharacterDecomposition {
    std::vector<CharacterMultiplicity> irreps;
    double weighted_sum = 0.0;   ///< sum_mu d_mu m_mu, equals d^N when complete
    double dim_square_sum = 0.0; ///< sum_mu d_mu^2 over the supplied table
    double total_multiplicity = 0.0;
    bool all_consistent = false;
    /// sum over irreps with m_mu >= 1 of d_mu^2
    double occupied_dim_square_sum = 0.0;
    /// every irrep has m_mu >= d_mu
    bool contains_regular = false;
};

[[nodiscard]] CharacterDecomposition
decompose_by_characters(const GateSet &group, const GroupTable &table,
                        const CharacterTable &chars, std::size_t n);

} // namespace gateid::groups
