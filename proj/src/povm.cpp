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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "gateid/discriminate.hpp"
#include "gateid/errors.hpp"

namespace gateid::discriminate {

namespace {

void require_same_length(const std::vector<ComplexVector> &states) {
    if (states.empty()) {
        throw InvalidArgument("need at least one state");
    }
    for (const auto &s : states) {
        if (s.size() != states.front().size()) {
            throw InvalidArgument("states have different lengths");
        }
    }
}

std::vector<std::string> with_inconclusive(std::vector<std::string> labels) {
    if (std::find(labels.begin(), labels.end(), kInconclusive) != labels.end()) {
        throw InvalidArgument("label " + kInconclusive + " is reserved");
    }
    labels.push_back(kInconclusive);
    return labels;
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    return (m + m.adjoint()) / 2.0;
}

ComplexMatrix remainder(const std::vector<ComplexMatrix> &ops, Eigen::Index dim) {
    ComplexMatrix rest = ComplexMatrix::Identity(dim, dim);
    for (const auto &op : ops) {
        rest -= op;
    }
    return hermitian_part(rest);
}

} // namespace

PovmCheck check_povm(const Povm &p, const NumericConfig &cfg) {
    PovmCheck c;
    if (p.ops.empty() || p.ops.size() != p.labels.size()) {
        return c;
    }
    const Eigen::Index dim = p.ops.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    c.min_eigenvalue = 1.0;
    for (const auto &op : p.ops) {
        if (op.rows() != dim || op.cols() != dim) {
            return c;
        }
        sum += op;
        c.hermiticity_defect = std::max(c.hermiticity_defect, numerics::hermiticity_defect(op));
        c.min_eigenvalue = std::min(c.min_eigenvalue, numerics::min_eigenvalue(op));
    }
    c.completeness_residual = (sum - ComplexMatrix::Identity(dim, dim)).norm();
    c.ok = c.completeness_residual <= kCompletenessTolerance &&
           c.min_eigenvalue >= -cfg.psd_tol && c.hermiticity_defect <= cfg.psd_tol;
    return c;
}

Povm pgm_povm(const std::vector<ComplexVector> &states, const std::vector<double> &priors,
              const std::vector<std::string> &labels, const NumericConfig &cfg) {
    require_same_length(states);
    if (priors.size() != states.size() || labels.size() != states.size()) {
        throw InvalidArgument("states, priors and labels must align");
    }
    for (double p : priors) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw InvalidArgument("priors must be finite and nonnegative");
        }
    }
    const Eigen::Index dim = states.front().size();
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (std::size_t x = 0; x < states.size(); ++x) {
        rho.noalias() += priors[x] * states[x] * states[x].adjoint();
    }
    if (rho.norm() == 0.0) {
        throw InvalidArgument("average state vanishes");
    }
    const auto spec = numerics::psd_inverse_sqrt(hermitian_part(rho), cfg);
    Povm out;
    out.labels = with_inconclusive(labels);
    for (std::size_t x = 0; x < states.size(); ++x) {
        const ComplexVector w = spec.inverse_sqrt * states[x];
        out.ops.push_back(hermitian_part(priors[x] * w * w.adjoint()));
    }
    out.ops.push_back(remainder(out.ops, dim));
    return out;
}

Povm unambiguous_povm(const std::vector<ComplexVector> &states,
                      const std::vector<std::string> &labels, const NumericConfig &cfg) {
    require_same_length(states);
    if (labels.size() != states.size()) {
        throw InvalidArgument("states and labels must align");
    }
    const Eigen::Index dim = states.front().size();
    const auto k = static_cast<Eigen::Index>(states.size());
    ComplexMatrix psi(dim, k);
    for (Eigen::Index x = 0; x < k; ++x) {
        psi.col(x) = states[static_cast<std::size_t>(x)];
    }
    if (numerics::numeric_rank(psi, cfg) != states.size()) {
        throw InvalidArgument("states are linearly dependent; no unambiguous measurement");
    }
    // psi = U S V^dag, duals U S^{-1} V^dag; sum |phi><phi| = U S^{-2} U^dag
    const Eigen::JacobiSVD<ComplexMatrix> svd(psi, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd &s = svd.singularValues();
    const ComplexMatrix duals =
        svd.matrixU() * s.cwiseInverse().asDiagonal() * svd.matrixV().adjoint();
    const double c = s(k - 1) * s(k - 1);
    Povm out;
    out.labels = with_inconclusive(labels);
    for (Eigen::Index x = 0; x < k; ++x) {
        out.ops.push_back(hermitian_part(c * duals.col(x) * duals.col(x).adjoint()));
    }
    out.ops.push_back(remainder(out.ops, dim));
    return out;
}

void check_strategy(const GateSet &g, const Strategy &s, const NumericConfig &cfg) {
    if (s.queries == 0 || s.ancilla_dim == 0) {
        throw ValidationError("strategy needs at least one query and a nonzero ancilla");
    }
    const std::size_t dim =
        numerics::checked_pow(g.dimension, s.queries) * s.ancilla_dim;
    if (static_cast<std::size_t>(s.input.size()) != dim) {
        throw ValidationError("strategy input length " + std::to_string(s.input.size()) +
                              " does not match d^N * d_A = " + std::to_string(dim));
    }
    if (std::abs(s.input.norm() - 1.0) > 1e-12) {
        throw ValidationError("strategy input is not a unit vector");
    }
    if (s.povm.labels.size() != g.size() + 1 || s.povm.labels.back() != kInconclusive) {
        throw ValidationError("POVM must have one outcome per gate plus " + kInconclusive);
    }
    for (std::size_t x = 0; x < g.size(); ++x) {
        if (s.povm.labels[x] != g.gates[x].label) {
            throw ValidationError("POVM outcome '" + s.povm.labels[x] +
                                  "' does not match gate '" + g.gates[x].label + "'");
        }
    }
    if (s.povm.space_dim() != dim) {
        throw ValidationError("POVM acts on the wrong space");
    }
    const auto check = check_povm(s.povm, cfg);
    if (!check.ok) {
        throw ValidationError("POVM fails positivity or completeness (residual " +
                              std::to_string(check.completeness_residual) +
                              ", min eigenvalue " + std::to_string(check.min_eigenvalue) + ")");
    }
}

Strategy pgm_strategy(const GateSet &g, std::size_t n, const ComplexVector &input,
                      std::size_t ancilla_dim, const NumericConfig &cfg) {
    const auto outs = output_states(g, n, input, ancilla_dim, cfg);
    return {n, ancilla_dim, input, pgm_povm(outs, g.priors, g.labels(), cfg)};
}

Strategy unambiguous_strategy(const GateSet &g, std::size_t n, const ComplexVector &input,
                              std::size_t ancilla_dim, const NumericConfig &cfg) {
    const auto outs = output_states(g, n, input, ancilla_dim, cfg);
    return {n, ancilla_dim, input, unambiguous_povm(outs, g.labels(), cfg)};
}

Strategy design_strategy(const GateSet &g, std::size_t n, const NumericConfig &cfg) {
    const std::size_t sys = numerics::checked_pow(g.dimension, n);
    numerics::require_within_cap("design strategy space",
                                 numerics::checked_pow(sys, 2), cfg.dim_cap);
    const ComplexVector phi = numerics::max_entangled(sys);
    const auto outs = output_states(g, n, phi, sys, cfg);
    const Eigen::Index dim = phi.size();
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (const auto &v : outs) {
        rho.noalias() += v * v.adjoint();
    }
    rho /= static_cast<double>(outs.size());
    const auto spec = numerics::psd_inverse_sqrt(hermitian_part(rho), cfg);
    ComplexVector input = spec.inverse_sqrt * phi;
    input.normalize();
    return pgm_strategy(g, n, input, sys, cfg);
}

bool EvalResult::error_free(double tol) const {
    return conditional_success && *conditional_success >= 1.0 - tol;
}

EvalResult evaluate_strategy(const GateSet &g, const Strategy &s, const NumericConfig &cfg) {
    check_strategy(g, s, cfg);
    const auto outs = output_states(g, s.queries, s.input, s.ancilla_dim, cfg);
    const std::size_t k = g.size();
    EvalResult r;
    r.gate_labels = g.labels();
    r.outcome_labels = s.povm.labels;
    r.table.resize(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k + 1));
    for (std::size_t x = 0; x < k; ++x) {
        double row = 0.0;
        for (std::size_t y = 0; y <= k; ++y) {
            const double p = outs[x].dot(s.povm.ops[y] * outs[x]).real();
            r.table(x, y) = p;
            row += p;
        }
        r.max_row_defect = std::max(r.max_row_defect, std::abs(row - 1.0));
        for (std::size_t y = 0; y < k; ++y) {
            (y == x ? r.success_prob : r.error_prob) += g.priors[x] * r.table(x, y);
        }
        r.inconclusive_prob += g.priors[x] * r.table(x, k);
    }
    const double conclusive = r.success_prob + r.error_prob;
    if (conclusive > 1e-15) {
        r.conditional_success = r.success_prob / conclusive;
    }
    return r;
}

SimulationResult simulate_from_table(const GateSet &g, const EvalResult &eval,
                                     std::size_t shots, std::uint64_t seed,
                                     const NumericConfig &cfg) {
    if (shots == 0) {
        throw InvalidArgument("shots must be at least 1");
    }
    const std::size_t k = g.size();
    const std::size_t outcomes = k + 1;
    // cumulative distributions; entries within psd_tol below zero count as 0
    auto cumulative = [&](auto value, std::size_t count) {
        std::vector<double> cdf(count);
        double acc = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            double p = value(i);
            if (p < 0.0) {
                if (p < -cfg.psd_tol) {
                    throw NumericalError("negative probability " + std::to_string(p));
                }
                p = 0.0;
            }
            acc += p;
            cdf[i] = acc;
        }
        if (acc <= 0.0) {
            throw NumericalError("distribution has no mass");
        }
        for (double &c : cdf) {
            c /= acc;
        }
        return cdf;
    };
    const auto prior_cdf = cumulative([&](std::size_t x) { return g.priors[x]; }, k);
    std::vector<std::vector<double>> row_cdf;
    for (std::size_t x = 0; x < k; ++x) {
        row_cdf.push_back(cumulative(
            [&](std::size_t y) {
                return eval.table(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
            },
            outcomes));
    }
    auto pick = [](const std::vector<double> &cdf, double u) {
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        return std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
    };

    SimulationResult res;
    res.shots = shots;
    res.seed = seed;
    res.gate_labels = eval.gate_labels;
    res.outcome_labels = eval.outcome_labels;
    res.counts.assign(k, std::vector<std::uint64_t>(outcomes, 0));
    const std::size_t batches = (shots + kShotBatch - 1) / kShotBatch;
    for (std::size_t b = 0; b < batches; ++b) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
        std::mt19937_64 rng(seq);
        auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1p-53; };
        const std::size_t in_batch = std::min(kShotBatch, shots - b * kShotBatch);
        for (std::size_t i = 0; i < in_batch; ++i) {
            const std::size_t x = pick(prior_cdf, uniform());
            const std::size_t y = pick(row_cdf[x], uniform());
            ++res.counts[x][y];
        }
    }
    for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < outcomes; ++y) {
            const std::uint64_t c = res.counts[x][y];
            if (y == k) {
                res.inconclusive += c;
            } else if (y == x) {
                res.correct += c;
            } else {
                res.errors += c;
            }
        }
    }
    return res;
}

SimulationResult simulate_strategy(const GateSet &g, const Strategy &s, std::size_t shots,
                                   std::uint64_t seed, const NumericConfig &cfg) {
    return simulate_from_table(g, evaluate_strategy(g, s, cfg), shots, seed, cfg);
}

} // namespace gateid::discriminate
