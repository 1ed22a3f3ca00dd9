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
 * Span-dimension tests, optimal success probabilities, POVM constructions,
 * and evaluation and simulation of parallel strategies.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gateid/gatesets.hpp"
#include "gateid/numerics.hpp"

namespace gateid::discriminate {

/// Label of the inconclusive POVM element.
inline const std::string kInconclusive = "INCONCLUSIVE";

/// dim span{ |U_x^{(x)N}>> }. Requires d^{2N} within the cap.
[[nodiscard]] std::size_t span_dimension(const GateSet &g, std::size_t n,
                                         const NumericConfig &cfg);

struct Classification {
    std::size_t span_dim = 0;
    bool unambiguous = false;
    /// Gates whose N-th power lies outside the span of the others.
    std::vector<std::string> error_free_labels;
};

[[nodiscard]] Classification classify_discriminability(const GateSet &g,
                                                       std::size_t n,
                                                       const NumericConfig &cfg);

/// |U| - dim span{|U_x>>} + 1.
[[nodiscard]] std::size_t linear_query_bound(const GateSet &g,
                                             const NumericConfig &cfg);

/**
 * Smallest N with span_dimension(g, N) = |U|. The search stops at the
 * linear bound, where success is guaranteed; CapExceeded is raised if the
 * cap is hit first.
 */
[[nodiscard]] std::size_t min_queries_unambiguous(const GateSet &g,
                                                  const NumericConfig &cfg);

/**
 * max_x p_x <<U_x|^{(x)N} R_N^+ |U_x>>^{(x)N}, with
 * R_N = sum_x p_x (|U_x>><<U_x|)^{(x)N}.
 */
[[nodiscard]] double pmax(const GateSet &g, std::size_t n, const NumericConfig &cfg);

/**
 * span_dimension / |U| for uniform priors. Nonuniform priors raise
 * InvalidArgument unless `allow_nonuniform`, in which case the value is
 * span_dimension * max_x p_x.
 */
[[nodiscard]] double design_pmax(const GateSet &g, std::size_t n,
                                 const NumericConfig &cfg,
                                 bool allow_nonuniform = false);

/**
 * (U_x^{(x)N} (x) I_A)|input> for every gate. The input lives on
 * (C^d)^{(x)N} (x) C^{d_A}, query systems first.
 */
[[nodiscard]] std::vector<ComplexVector> output_states(const GateSet &g, std::size_t n,
                                                       const ComplexVector &input,
                                                       std::size_t ancilla_dim,
                                                       const NumericConfig &cfg);

/// Outcome operators; the last one is the inconclusive element.
struct Povm {
    std::vector<std::string> labels;
    std::vector<ComplexMatrix> ops;

    [[nodiscard]] std::size_t space_dim() const {
        return ops.empty() ? 0 : static_cast<std::size_t>(ops.front().rows());
    }
};

struct PovmCheck {
    double completeness_residual = 0.0; ///< ||sum_y P_y - I||_F
    double min_eigenvalue = 0.0;        ///< over all elements
    double hermiticity_defect = 0.0;    ///< max over all elements
    bool ok = false;
};

inline constexpr double kCompletenessTolerance = 1e-8;

[[nodiscard]] PovmCheck check_povm(const Povm &p, const NumericConfig &cfg);

/**
 * Square-root measurement P_x = p_x rho^{-1/2}|psi_x><psi_x|rho^{-1/2}
 * with rho = sum_x p_x |psi_x><psi_x|, completed by P_? = I - sum_x P_x.
 */
[[nodiscard]] Povm pgm_povm(const std::vector<ComplexVector> &states,
                            const std::vector<double> &priors,
                            const std::vector<std::string> &labels,
                            const NumericConfig &cfg);

/**
 * Dual-basis measurement P_x = c |phi_x><phi_x| with <phi_x|psi_y> = delta_xy
 * and c = 1 / lambda_max(sum_x |phi_x><phi_x|). Linearly dependent states
 * raise InvalidArgument.
 */
[[nodiscard]] Povm unambiguous_povm(const std::vector<ComplexVector> &states,
                                    const std::vector<std::string> &labels,
                                    const NumericConfig &cfg);

/// Parallel strategy: N queries on one joint input, then one measurement.
struct Strategy {
    std::size_t queries = 0;
    std::size_t ancilla_dim = 1;
    ComplexVector input;
    Povm povm;
};

/// Throws ValidationError unless shapes, normalization and the POVM agree.
void check_strategy(const GateSet &g, const Strategy &s, const NumericConfig &cfg);

/// PGM on the outputs of an arbitrary input.
[[nodiscard]] Strategy pgm_strategy(const GateSet &g, std::size_t n,
                                    const ComplexVector &input, std::size_t ancilla_dim,
                                    const NumericConfig &cfg);

/// Dual-basis measurement on the outputs of an arbitrary input.
[[nodiscard]] Strategy unambiguous_strategy(const GateSet &g, std::size_t n,
                                            const ComplexVector &input,
                                            std::size_t ancilla_dim,
                                            const NumericConfig &cfg);

/**
 * Input rho^{-1/2}|Phi> (normalized), with |Phi> maximally entangled between
 * the N queries and a d^N-dimensional ancilla and rho the uniform average of
 * its outputs, followed by the PGM. For group sets this reaches
 * span_dimension / |U|.
 */
[[nodiscard]] Strategy design_strategy(const GateSet &g, std::size_t n,
                                       const NumericConfig &cfg);

struct EvalResult {
    std::vector<std::string> gate_labels;
    std::vector<std::string> outcome_labels; ///< gate labels then INCONCLUSIVE
    Eigen::MatrixXd table;                    ///< p(y|x), rows x, columns y
    /// sum_x p_x p(x|x) / sum_x sum_{y != ?} p_x p(y|x); empty if every
    /// outcome is inconclusive.
    std::optional<double> conditional_success;
    double success_prob = 0.0; ///< sum_x p_x p(x|x)
    double error_prob = 0.0;
    double inconclusive_prob = 0.0;
    double max_row_defect = 0.0; ///< max_x |sum_y p(y|x) - 1|

    [[nodiscard]] bool all_inconclusive() const { return !conditional_success; }
    [[nodiscard]] bool error_free(double tol = 1e-9) const;
};

[[nodiscard]] EvalResult evaluate_strategy(const GateSet &g, const Strategy &s,
                                           const NumericConfig &cfg);

struct SimulationResult {
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> gate_labels;
    std::vector<std::string> outcome_labels;
    /// counts[x][y]: shots with true gate x and outcome y.
    std::vector<std::vector<std::uint64_t>> counts;
    std::uint64_t correct = 0;
    std::uint64_t errors = 0;
    std::uint64_t inconclusive = 0;
};

inline constexpr std::size_t kShotBatch = 4096;

/**
 * Draws the true gate from the priors and the outcome from p(y|x). Shots
 * are split into batches of kShotBatch; batch b uses an mt19937_64 seeded
 * with seed_seq{seed_lo, seed_hi, b}, so results do not depend on how
 * batches are scheduled.
 */
[[nodiscard]] SimulationResult simulate_strategy(const GateSet &g, const Strategy &s,
                                                 std::size_t shots, std::uint64_t seed,
                                                 const NumericConfig &cfg);

/// Sampling from an already evaluated strategy.
[[nodiscard]] SimulationResult simulate_from_table(const GateSet &g, const EvalResult &eval,
                                                   std::size_t shots, std::uint64_t seed,
                                                   const NumericConfig &cfg);

[[nodiscard]] std::string serialize_povm(const Povm &p);
[[nodiscard]] Povm parse_povm(std::string_view json);
[[nodiscard]] std::string serialize_strategy(const Strategy &s);
[[nodiscard]] Strategy parse_strategy(std::string_view json);
[[nodiscard]] std::string serialize_eval(const EvalResult &e);

} // namespace gateid::discriminate
