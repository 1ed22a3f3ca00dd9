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
 * Closed-form bounds on queries and ancilla dimension, evaluated with exact
 * integer or rational arithmetic wherever the formula allows, and a report
 * that cross-checks them.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gateid/gatesets.hpp"
#include "gateid/groups.hpp"
#include "gateid/rational.hpp"

namespace gateid::bounds {

struct DimensionalBound {
    std::size_t queries = 0; ///< smallest N with binom(N + d^2 - 1, d^2 - 1) >= card
    double crude = 0.0;      ///< card^{1/(d^2-1)} - 1
};

[[nodiscard]] DimensionalBound dimensional_min_queries(std::uint64_t card, std::size_t d);

/// card - dim_u + 1.
[[nodiscard]] std::size_t linear_upper_bound(std::size_t card, std::size_t dim_u);

/**
 * Smallest N with F^{N/2} (K - 1) < 1, i.e. floor(log(K-1) / log F^{-1/2}) + 1,
 * decided exactly. F = 0 or K = 2 give 1; F >= 1 raises InvalidArgument.
 */
[[nodiscard]] std::size_t copies_for_unambiguous(const Rational &f, std::uint64_t k);

/// Floating-point version; values within 1e-9 of a boundary count as ties,
/// which are never sufficient.
[[nodiscard]] std::size_t copies_for_unambiguous(double f, std::uint64_t k);

/// ceil((log d_A + log sqrt|G|) / log d), as the smallest n with d^{2n} >= d_A^2 |G|.
[[nodiscard]] std::size_t extra_queries_bound(std::uint64_t d_a, std::uint64_t group_order,
                                              std::size_t d);

struct AncillaFreeResult {
    std::optional<std::size_t> queries; ///< empty when no N <= kMaxAncillaFreeQueries works
    std::size_t packing_bound = 0;      ///< ceil(log_d |G|)
    /// [ceil(log_d |G|), ceil(log_d |G|) + log_d(1/alpha)] when the alpha condition holds.
    std::optional<std::pair<double, double>> bracket;
    std::string note;
};

inline constexpr std::size_t kMaxAncillaFreeQueries = 64;

/**
 * Smallest N with d^N (1 - F_ent^{N/2} C) >= |G|, checked exactly. The
 * criterion is sufficient only, so an empty result means "not certified".
 */
[[nodiscard]] AncillaFreeResult
ancilla_free_group_min_queries(std::size_t d, std::uint64_t group_order, const Rational &f_ent,
                               std::uint64_t c, std::optional<double> alpha = std::nullopt);

/// Largest entanglement fidelity |Tr U_g|^2 / d^2 over g != e, and the
/// number C of non-identity elements with nonzero trace.
struct GroupFidelity {
    Rational f_ent;
    double f_ent_value = 0.0;
    std::uint64_t confusable = 0;
    bool exact = false; ///< f_ent snapped to a small fraction; else rounded up
};

[[nodiscard]] GroupFidelity group_fidelity(const GateSet &g, const groups::GroupTable &table);

enum class BoundKind { Lower, Upper, Feasibility, Measured };

[[nodiscard]] std::string_view kind_name(BoundKind k);

struct BoundEntry {
    std::string name;
    std::string quantity; ///< N_min, d_A_min, N_AF_min, ...
    BoundKind kind = BoundKind::Lower;
    double value = 0.0;
    std::string eq_tag; ///< the formula evaluated
    std::string note;
};

/// binomial, sqrt|G| (and its ceiling), commuting, and hook-formula ancilla bounds.
[[nodiscard]] std::vector<BoundEntry> ancilla_bounds(std::size_t n, std::size_t d,
                                                     std::optional<std::uint64_t> group_order,
                                                     bool commuting, bool include_young = true);

struct BoundsReport {
    std::vector<BoundEntry> entries;
    std::vector<std::string> flags;

    [[nodiscard]] bool consistent() const { return flags.empty(); }
};

struct ReportInputs {
    std::size_t span_dim_1 = 0; ///< dim span{|U_x>>}
    std::optional<std::size_t> measured_n_min;
    std::optional<double> fidelity; ///< squared-overlap minimax fidelity (upper estimate)
    std::string fidelity_source;
    std::optional<std::size_t> ancilla_queries;
    std::optional<std::uint64_t> group_order;
    bool commuting = false;
    std::optional<std::size_t> measured_ancilla;
    std::optional<GroupFidelity> group_fidelity;
    std::optional<std::uint64_t> extra_queries_ancilla;
};

/// Merges every applicable bound and flags lower > upper or measured values outside.
[[nodiscard]] BoundsReport assemble_report(const GateSet &g, const ReportInputs &in);

} // namespace gateid::bounds
