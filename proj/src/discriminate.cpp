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
#include <string>

#include "gateid/discriminate.hpp"
#include "gateid/errors.hpp"

namespace gateid::discriminate {

namespace {

std::vector<ComplexVector> powered_choi(const GateSet &g, std::size_t n,
                                        const NumericConfig &cfg) {
    if (n == 0) {
        throw InvalidArgument("query count must be at least 1");
    }
    const std::size_t d2 = g.dimension * g.dimension;
    numerics::require_within_cap("Choi vectors of U^(x)N", numerics::checked_pow(d2, n),
                                 cfg.dim_cap);
    std::vector<ComplexVector> out;
    out.reserve(g.size());
    for (const auto &gate : g.gates) {
        out.push_back(numerics::tensor_power(numerics::choi_vector(gate.matrix), n, cfg.dim_cap));
    }
    return out;
}

} // namespace

std::size_t span_dimension(const GateSet &g, std::size_t n, const NumericConfig &cfg) {
    const auto vs = powered_choi(g, n, cfg);
    return numerics::numeric_rank(vs, cfg);
}

Classification classify_discriminability(const GateSet &g, std::size_t n,
                                         const NumericConfig &cfg) {
    const auto vs = powered_choi(g, n, cfg);
    Classification c;
    c.span_dim = numerics::numeric_rank(vs, cfg);
    c.unambiguous = c.span_dim == g.size();
    std::vector<ComplexVector> rest;
    rest.reserve(vs.size());
    for (std::size_t x = 0; x < vs.size(); ++x) {
        rest.clear();
        for (std::size_t y = 0; y < vs.size(); ++y) {
            if (y != x) {
                rest.push_back(vs[y]);
            }
        }
        if (numerics::numeric_rank(rest, cfg) < c.span_dim) {
            c.error_free_labels.push_back(g.gates[x].label);
        }
    }
    return c;
}

std::size_t linear_query_bound(const GateSet &g, const NumericConfig &cfg) {
    return g.size() - span_dimension(g, 1, cfg) + 1;
}

std::size_t min_queries_unambiguous(const GateSet &g, const NumericConfig &cfg) {
    const std::size_t bound = linear_query_bound(g, cfg);
    const std::size_t d2 = g.dimension * g.dimension;
    for (std::size_t n = 1; n <= bound; ++n) {
        const std::size_t dim = numerics::checked_pow(d2, n);
        if (dim > cfg.dim_cap) {
            throw CapExceeded("unambiguous query search (linear bound guarantees success by N=" +
                                  std::to_string(bound) + ", stopped at N=" +
                                  std::to_string(n) + ")",
                              dim, cfg.dim_cap);
        }
        if (span_dimension(g, n, cfg) == g.size()) {
            return n;
        }
    }
    throw NumericalError("no N up to the linear bound " + std::to_string(bound) +
                         " gave full span; rank tolerance too loose?");
}

double pmax(const GateSet &g, std::size_t n, const NumericConfig &cfg) {
    if (n == 0) {
        throw InvalidArgument("query count must be at least 1");
    }
    const std::size_t k = g.size();
    const std::size_t big = numerics::checked_pow(g.dimension * g.dimension, n);
    numerics::require_within_cap("R_N", big, cfg.dim_cap);

    // p_x <<U_x| R^+ |U_x>> equals the diagonal of the projector G^+ G for the
    // weighted Gram matrix G_xy = sqrt(p_x p_y) Tr(U_x^dag U_y)^N, which is
    // cheaper whenever |U| < d^{2N}.
    std::vector<double> values(k);
    if (k < big) {
        ComplexMatrix gram(k, k);
        for (std::size_t x = 0; x < k; ++x) {
            for (std::size_t y = 0; y < k; ++y) {
                const Complex tr = numerics::hs_inner(g.gates[x].matrix, g.gates[y].matrix);
                gram(x, y) = std::sqrt(g.priors[x] * g.priors[y]) *
                             std::pow(tr, static_cast<int>(n));
            }
        }
        const auto spec = numerics::psd_inverse_sqrt(gram, cfg);
        const ComplexMatrix proj = spec.inverse * gram;
        for (std::size_t x = 0; x < k; ++x) {
            values[x] = proj(x, x).real();
        }
    } else {
        const auto vs = powered_choi(g, n, cfg);
        ComplexMatrix r = ComplexMatrix::Zero(big, big);
        for (std::size_t x = 0; x < k; ++x) {
            r.noalias() += g.priors[x] * vs[x] * vs[x].adjoint();
        }
        const auto spec = numerics::psd_inverse_sqrt(r, cfg);
        for (std::size_t x = 0; x < k; ++x) {
            values[x] = g.priors[x] * vs[x].dot(spec.inverse * vs[x]).real();
        }
    }
    return std::min(1.0, *std::max_element(values.begin(), values.end()));
}

double design_pmax(const GateSet &g, std::size_t n, const NumericConfig &cfg,
                   bool allow_nonuniform) {
    const double dim = static_cast<double>(span_dimension(g, n, cfg));
    if (g.has_uniform_priors()) {
        return dim / static_cast<double>(g.size());
    }
    if (!allow_nonuniform) {
        throw InvalidArgument("design_pmax needs uniform priors");
    }
    return std::min(1.0, dim * g.max_prior());
}

std::vector<ComplexVector> output_states(const GateSet &g, std::size_t n,
                                         const ComplexVector &input,
                                         std::size_t ancilla_dim,
                                         const NumericConfig &cfg) {
    if (n == 0 || ancilla_dim == 0) {
        throw InvalidArgument("queries and ancilla dimension must be positive");
    }
    const std::size_t sys = numerics::checked_pow(g.dimension, n);
    const std::size_t total = sys == SIZE_MAX || sys > SIZE_MAX / ancilla_dim
                                  ? SIZE_MAX
                                  : sys * ancilla_dim;
    numerics::require_within_cap("strategy space", total, cfg.dim_cap);
    if (static_cast<std::size_t>(input.size()) != total) {
        throw InvalidArgument("input has length " + std::to_string(input.size()) +
                              ", expected d^N * d_A = " + std::to_string(total));
    }
    std::vector<std::size_t> dims(n, g.dimension);
    dims.push_back(ancilla_dim);
    std::vector<ComplexVector> out;
    out.reserve(g.size());
    for (const auto &gate : g.gates) {
        ComplexVector v = input;
        for (std::size_t slot = 0; slot < n; ++slot) {
            v = numerics::apply_on_factor(v, gate.matrix, dims, slot);
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace gateid::discriminate
