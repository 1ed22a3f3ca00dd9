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
 * Heuristic searches for quantities defined as extrema over input states:
 * minimax fidelities, the local span dimension and the smallest ancilla
 * that makes the outputs linearly independent.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "gateid/gatesets.hpp"
#include "gateid/numerics.hpp"

namespace gateid::optimize {

enum class FidelityMode { Bipartite, Local };

[[nodiscard]] std::string_view mode_name(FidelityMode m);
[[nodiscard]] FidelityMode parse_mode(std::string_view name);

/**
 * Smoothing schedule: each stage runs kStepsPerStage projected-gradient steps
 * on (1/T) log sum exp(T f_xy) with T = temperature / max_xy f_xy at stage
 * start, step sizes by Armijo backtracking.
 */
inline constexpr double kTemperatures[] = {10.0, 30.0, 100.0, 300.0};
inline constexpr std::size_t kStepsPerStage = 200;

struct FidelityResult {
    /// min(heuristic, certified). An upper bound on the true minimax value.
    double value = 1.0;
    double heuristic = 1.0;
    /// max_xy f_xy at the maximally entangled (bipartite) or uniform (local) state.
    double certified = 1.0;
    ComplexVector argmin_state;
    FidelityMode mode = FidelityMode::Bipartite;
    std::size_t restarts_used = 0;
    bool converged = false;
};

/**
 * Minimizes max_{x != y} |<Psi|(U_x^dag U_y (x) I)|Psi>|^2 (bipartite, reference
 * of dimension d) or max_{x != y} |<psi|U_x^dag U_y|psi>|^2 (local). Restart 0
 * starts from the certified state; restart r > 0 from a complex Gaussian drawn
 * with seed_seq{seed, r}.
 */
[[nodiscard]] FidelityResult minimax_fidelity(const GateSet &g, FidelityMode mode,
                                              std::size_t restarts, std::uint64_t seed,
                                              const NumericConfig &cfg);

/// Worst pairwise fidelity of one fixed state.
[[nodiscard]] double max_pair_fidelity(const GateSet &g, FidelityMode mode,
                                       const ComplexVector &state);

struct ProbeResult {
    std::size_t value = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultTrials = 16;

/// Random unit vector, complex Gaussian, from seed_seq{seed, stream}.
[[nodiscard]] ComplexVector random_state(std::size_t dim, std::uint64_t seed,
                                         std::uint64_t stream);

/// max over random states psi of rank{U_x psi}.
[[nodiscard]] ProbeResult local_span_dimension(const GateSet &g, std::size_t trials,
                                               std::uint64_t seed, const NumericConfig &cfg);

/**
 * Smallest d_A <= d_A_max for which some probed input on (C^d)^{(x)N} (x) C^{d_A}
 * gives |U| linearly independent outputs. Probes are random states plus, once
 * d_A >= d^N, the maximally entangled state. Raises Infeasible when
 * span_dimension(g, N) < |U| or no d_A up to d_A_max works.
 */
[[nodiscard]] ProbeResult min_ancilla_probe(const GateSet &g, std::size_t n,
                                            std::size_t d_a_max, std::size_t trials,
                                            std::uint64_t seed, const NumericConfig &cfg);

} // namespace gateid::optimize
