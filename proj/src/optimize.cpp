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
#include "gateid/optimize.hpp"

namespace gateid::optimize {

namespace {

/// Pairwise fidelities f_xy = |<phi_x|phi_y>|^2 with phi_x = A_x psi.
class PairObjective {
  public:
    PairObjective(const GateSet &g, FidelityMode mode) {
        const auto d = static_cast<Eigen::Index>(g.dimension);
        for (const auto &gate : g.gates) {
            ops_.push_back(mode == FidelityMode::Bipartite
                               ? numerics::kron(gate.matrix, ComplexMatrix::Identity(d, d))
                               : gate.matrix);
        }
        dim_ = ops_.front().rows();
    }

    [[nodiscard]] Eigen::Index dim() const { return dim_; }

    /// Gram matrix <phi_x|phi_y> and the outputs.
    void outputs(const ComplexVector &psi, ComplexMatrix &phi, ComplexMatrix &gram) const {
        phi.resize(dim_, static_cast<Eigen::Index>(ops_.size()));
        for (std::size_t x = 0; x < ops_.size(); ++x) {
            phi.col(static_cast<Eigen::Index>(x)) = ops_[x] * psi;
        }
        gram = phi.adjoint() * phi;
    }

    [[nodiscard]] double max_value(const ComplexVector &psi) const {
        ComplexMatrix phi;
        ComplexMatrix gram;
        outputs(psi, phi, gram);
        return max_offdiag(gram);
    }

    static double max_offdiag(const ComplexMatrix &gram) {
        double m = 0.0;
        for (Eigen::Index x = 0; x < gram.rows(); ++x) {
            for (Eigen::Index y = x + 1; y < gram.cols(); ++y) {
                m = std::max(m, std::norm(gram(x, y)));
            }
        }
        return m;
    }

    /// Smoothed max at inverse temperature beta, and its Wirtinger gradient.
    double smoothed(const ComplexVector &psi, double beta, ComplexVector *grad) const {
        ComplexMatrix phi;
        ComplexMatrix gram;
        outputs(psi, phi, gram);
        const double fmax = max_offdiag(gram);
        const Eigen::Index k = gram.rows();
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(k, k);
        double z = 0.0;
        for (Eigen::Index x = 0; x < k; ++x) {
            for (Eigen::Index y = x + 1; y < k; ++y) {
                const double e = std::exp(beta * (std::norm(gram(x, y)) - fmax));
                w(x, y) = w(y, x) = e;
                z += e;
            }
        }
        const double value = fmax + std::log(z) / beta;
        if (grad != nullptr) {
            // d f_xy / d conj(psi) summed over pairs collapses to
            // sum_x A_x^dag (Phi (W o G))_x
            const ComplexMatrix weighted = (w / z).cast<Complex>().cwiseProduct(gram);
            const ComplexMatrix h = phi * weighted;
            grad->setZero(dim_);
            for (std::size_t x = 0; x < ops_.size(); ++x) {
                grad->noalias() += ops_[x].adjoint() * h.col(static_cast<Eigen::Index>(x));
            }
            *grad *= 2.0;
        }
        return value;
    }

  private:
    std::vector<ComplexMatrix> ops_;
    Eigen::Index dim_ = 0;
};

struct DescentOutcome {
    ComplexVector best_state;
    double best = 1.0;
    bool converged = false;
};

DescentOutcome descend(const PairObjective &obj, ComplexVector psi) {
    DescentOutcome out;
    out.best_state = psi;
    out.best = obj.max_value(psi);
    bool stalled = false;
    for (double temperature : kTemperatures) {
        const double scale = obj.max_value(psi);
        if (scale <= 0.0) {
            out.converged = true;
            break;
        }
        const double beta = temperature / scale;
        double step = 1.0;
        ComplexVector grad;
        double value = obj.smoothed(psi, beta, &grad);
        stalled = false;
        for (std::size_t it = 0; it < kStepsPerStage; ++it) {
            const Complex radial = psi.dot(grad);
            const ComplexVector tangent = grad - radial.real() * psi;
            const double gnorm2 = tangent.squaredNorm();
            if (gnorm2 < 1e-24) {
                stalled = true;
                break;
            }
            bool accepted = false;
            for (int bt = 0; bt < 40; ++bt) {
                ComplexVector trial = psi - step * tangent;
                trial.normalize();
                const double tv = obj.smoothed(trial, beta, nullptr);
                if (tv <= value - 1e-4 * step * gnorm2) {
                    psi = trial;
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) {
                stalled = true;
                break;
            }
            value = obj.smoothed(psi, beta, &grad);
            const double actual = obj.max_value(psi);
            if (actual < out.best) {
                out.best = actual;
                out.best_state = psi;
            }
            step = std::min(1.0, step * 2.0);
        }
    }
    out.converged = out.converged || stalled;
    return out;
}

ComplexVector certified_state(const GateSet &g, FidelityMode mode) {
    if (mode == FidelityMode::Bipartite) {
        return numerics::max_entangled(g.dimension);
    }
    const auto d = static_cast<Eigen::Index>(g.dimension);
    return ComplexVector::Constant(d, Complex(1.0 / std::sqrt(static_cast<double>(d)), 0.0));
}

} // namespace

std::string_view mode_name(FidelityMode m) {
    return m == FidelityMode::Bipartite ? "bipartite" : "local";
}

FidelityMode parse_mode(std::string_view name) {
    if (name == "bipartite") {
        return FidelityMode::Bipartite;
    }
    if (name == "local") {
        return FidelityMode::Local;
    }
    throw InvalidArgument("unknown fidelity mode '" + std::string(name) + "'");
}

ComplexVector random_state(std::size_t dim, std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    ComplexVector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = normal(rng);
        v(i) = Complex(re, normal(rng));
    }
    v.normalize();
    return v;
}

double max_pair_fidelity(const GateSet &g, FidelityMode mode, const ComplexVector &state) {
    const PairObjective obj(g, mode);
    if (state.size() != obj.dim()) {
        throw InvalidArgument("state has the wrong length for this mode");
    }
    return obj.max_value(state.normalized());
}

FidelityResult minimax_fidelity(const GateSet &g, FidelityMode mode, std::size_t restarts,
                                std::uint64_t seed, const NumericConfig &cfg) {
    if (restarts == 0) {
        throw InvalidArgument("restarts must be at least 1");
    }
    const PairObjective obj(g, mode);
    numerics::require_within_cap("fidelity search space", static_cast<std::size_t>(obj.dim()),
                                 cfg.dim_cap);
    FidelityResult r;
    r.mode = mode;
    const ComplexVector start = certified_state(g, mode);
    r.certified = obj.max_value(start);
    r.argmin_state = start;
    r.heuristic = r.certified;
    for (std::size_t rs = 0; rs < restarts; ++rs) {
        const ComplexVector psi0 =
            rs == 0 ? start : random_state(static_cast<std::size_t>(obj.dim()), seed, rs);
        const auto out = descend(obj, psi0);
        if (out.best < r.heuristic) {
            r.heuristic = out.best;
            r.argmin_state = out.best_state;
        }
        r.converged = r.converged || out.converged;
        ++r.restarts_used;
    }
    r.value = std::min(r.heuristic, r.certified);
    return r;
}

ProbeResult local_span_dimension(const GateSet &g, std::size_t trials, std::uint64_t seed,
                                 const NumericConfig &cfg) {
    if (trials == 0) {
        throw InvalidArgument("trials must be at least 1");
    }
    ProbeResult r;
    r.seed = seed;
    const std::size_t ceiling = std::min(g.size(), g.dimension);
    std::vector<ComplexVector> outs(g.size());
    for (std::size_t t = 0; t < trials; ++t) {
        const ComplexVector psi = random_state(g.dimension, seed, t);
        for (std::size_t x = 0; x < g.size(); ++x) {
            outs[x] = g.gates[x].matrix * psi;
        }
        r.value = std::max(r.value, numerics::numeric_rank(outs, cfg));
        r.trials = t + 1;
        if (r.value == ceiling) {
            break;
        }
    }
    return r;
}

ProbeResult min_ancilla_probe(const GateSet &g, std::size_t n, std::size_t d_a_max,
                              std::size_t trials, std::uint64_t seed, const NumericConfig &cfg) {
    if (n == 0 || d_a_max == 0 || trials == 0) {
        throw InvalidArgument("queries, d_A_max and trials must be positive");
    }
    const std::size_t sys = numerics::checked_pow(g.dimension, n);
    numerics::require_within_cap("ancilla probe space",
                                 sys > SIZE_MAX / d_a_max ? SIZE_MAX : sys * d_a_max, cfg.dim_cap);
    if (discriminate::span_dimension(g, n, cfg) != g.size()) {
        throw Infeasible("outputs cannot be independent for any ancilla: dim(U_N) < |U| at N = " +
                         std::to_string(n));
    }
    ProbeResult r;
    r.seed = seed;
    for (std::size_t d_a = 1; d_a <= d_a_max; ++d_a) {
        std::vector<ComplexVector> probes;
        if (d_a >= sys) {
            ComplexVector block = ComplexVector::Zero(static_cast<Eigen::Index>(sys * d_a));
            const double amp = 1.0 / std::sqrt(static_cast<double>(sys));
            for (std::size_t i = 0; i < sys; ++i) {
                block(static_cast<Eigen::Index>(i * d_a + i)) = amp;
            }
            probes.push_back(std::move(block));
        }
        for (std::size_t t = 0; t < trials; ++t) {
            probes.push_back(random_state(sys * d_a, seed, (std::uint64_t{d_a} << 32) | t));
        }
        for (const auto &psi : probes) {
            ++r.trials;
            const auto outs = discriminate::output_states(g, n, psi, d_a, cfg);
            if (numerics::numeric_rank(outs, cfg) == g.size()) {
                r.value = d_a;
                return r;
            }
        }
    }
    throw Infeasible("no ancilla dimension up to " + std::to_string(d_a_max) +
                     " gave independent outputs in " + std::to_string(r.trials) + " probes");
}

} // namespace gateid::optimize
