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

#include "gateid/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "gateid/errors.hpp"

namespace gateid::groups {

std::size_t GroupTable::inverse(std::size_t x) const {
    for (std::size_t y = 0; y < order; ++y) {
        if (product(x, y) == identity_index) {
            return y;
        }
    }
    throw InvalidArgument("group table has no inverse for element " +
                          std::to_string(x));
}

std::size_t GroupTable::element_order(std::size_t x) const {
    std::size_t power = x;
    for (std::size_t k = 1; k <= order; ++k) {
        if (power == identity_index) {
            return k;
        }
        power = product(power, x);
    }
    throw InvalidArgument("group table element has no finite order");
}

bool GroupTable::is_abelian() const {
    for (std::size_t x = 0; x < order; ++x) {
        for (std::size_t y = x + 1; y < order; ++y) {
            if (product(x, y) != product(y, x)) {
                return false;
            }
        }
    }
    return true;
}

bool GroupTable::satisfies_axioms() const {
    if (mult.size() != order * order || identity_index >= order) {
        return false;
    }
    for (std::size_t x = 0; x < order; ++x) {
        if (product(identity_index, x) != x || product(x, identity_index) != x) {
            return false;
        }
        std::vector<bool> row(order, false);
        std::vector<bool> col(order, false);
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t r = product(x, y);
            const std::size_t c = product(y, x);
            if (r >= order || c >= order || row[r] || col[c]) {
                return false;
            }
            row[r] = true;
            col[c] = true;
        }
    }
    for (std::size_t x = 0; x < order; ++x) {
        for (std::size_t y = 0; y < order; ++y) {
            for (std::size_t z = 0; z < order; ++z) {
                if (product(product(x, y), z) != product(x, product(y, z))) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

/// Phase-insensitive scalar fingerprint of a unitary used to bucket lookups.
class Fingerprint {
  public:
    explicit Fingerprint(std::size_t d) {
        std::mt19937_64 rng(0x5eedu);
        std::normal_distribution<double> normal;
        probe_.resize(static_cast<Eigen::Index>(d));
        weights_.resize(static_cast<Eigen::Index>(d));
        for (Eigen::Index i = 0; i < probe_.size(); ++i) {
            probe_(i) = Complex(normal(rng), normal(rng));
            weights_(i) = 1.0 + std::abs(normal(rng));
        }
    }

    [[nodiscard]] double operator()(const ComplexMatrix &u) const {
        const ComplexVector w = u * probe_;
        return (weights_.array() * w.cwiseAbs2().array()).sum();
    }

  private:
    ComplexVector probe_;
    Eigen::VectorXd weights_;
};

/// Distance from `p` to `u` (optionally after removing the best phase).
double match_distance(const ComplexMatrix &p, const ComplexMatrix &u,
                      bool up_to_phase) {
    if (!up_to_phase) {
        return (p - u).norm();
    }
    const Complex overlap = (u.adjoint() * p).trace();
    const double mag = std::abs(overlap);
    const Complex phase = mag > 0.0 ? overlap / mag : Complex(1.0, 0.0);
    return (p - phase * u).norm();
}

} // namespace

std::vector<Complex> multipliers(const GateSet &g, const GroupTable &table) {
    if (table.order != g.size()) {
        throw InvalidArgument("group table does not match the gate set");
    }
    const double d = static_cast<double>(g.dimension);
    std::vector<Complex> w(table.order * table.order);
    for (std::size_t x = 0; x < table.order; ++x) {
        for (std::size_t y = 0; y < table.order; ++y) {
            const ComplexMatrix prod = g.gates[x].matrix * g.gates[y].matrix;
            // U_z is unitary, so Tr(U_z^dag U_x U_y) / d is the phase
            w[x * table.order + y] =
                numerics::hs_inner(g.gates[table.product(x, y)].matrix, prod) / d;
        }
    }
    return w;
}

bool multiplier_power_trivial(const std::vector<Complex> &w, std::size_t n, double tol) {
    return std::all_of(w.begin(), w.end(), [&](const Complex &z) {
        return std::abs(std::pow(z, static_cast<int>(n)) - Complex(1.0, 0.0)) <= tol;
    });
}

ClosureResult closure_table(const GateSet &g, bool up_to_phase,
                            const NumericConfig &cfg) {
    const std::size_t n = g.size();
    const double tol = std::max(10.0 * cfg.unitarity_tol, 1e-12);
    if (n == 0) {
        return ClosureFailure{0, 0, "empty gate set"};
    }
    Fingerprint fp(g.dimension);
    std::vector<std::pair<double, std::size_t>> keyed;
    keyed.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        keyed.emplace_back(fp(g.gates[i].matrix), i);
    }
    std::sort(keyed.begin(), keyed.end());
    double key_scale = 0.0;
    for (const auto &k : keyed) {
        key_scale = std::max(key_scale, std::abs(k.first));
    }
    const double key_tol = 1e-6 * std::max(1.0, key_scale);

    auto lookup = [&](const ComplexMatrix &p, bool &needed_phase) -> std::size_t {
        const double key = fp(p);
        auto lo = std::lower_bound(keyed.begin(), keyed.end(),
                                   std::make_pair(key - key_tol, std::size_t{0}));
        for (auto it = lo; it != keyed.end() && it->first <= key + key_tol; ++it) {
            const ComplexMatrix &u = g.gates[it->second].matrix;
            if (match_distance(p, u, up_to_phase) <= tol) {
                needed_phase = (p - u).norm() > tol;
                return it->second;
            }
        }
        return n;
    };

    GroupTable table;
    table.order = n;
    table.mult.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const ComplexMatrix p = g.gates[x].matrix * g.gates[y].matrix;
            bool needed_phase = false;
            const std::size_t z = lookup(p, needed_phase);
            if (z == n) {
                return ClosureFailure{
                    x, y,
                    "product of '" + g.gates[x].label + "' and '" +
                        g.gates[y].label + "' is not in the set" +
                        (up_to_phase ? " (even up to phase)" : "")};
            }
            table.mult[x * n + y] = z;
            table.projective = table.projective || needed_phase;
        }
    }
    const ComplexMatrix id =
        ComplexMatrix::Identity(static_cast<Eigen::Index>(g.dimension),
                                static_cast<Eigen::Index>(g.dimension));
    bool identity_needs_phase = false;
    const std::size_t e = lookup(id, identity_needs_phase);
    if (e == n) {
        return ClosureFailure{0, 0, "set is closed but contains no identity"};
    }
    table.identity_index = e;
    table.projective = table.projective || identity_needs_phase;
    if (!table.satisfies_axioms()) {
        return ClosureFailure{0, 0, "multiplication table violates the group axioms"};
    }
    return table;
}

ComplexMatrix twirl_operator(const GateSet &g, std::size_t t, std::size_t cap) {
    if (t == 0) {
        throw InvalidArgument("design check requires t >= 1");
    }
    const std::size_t dim = numerics::checked_pow(g.dimension * g.dimension, t);
    numerics::require_within_cap("twirl", dim, cap);
    ComplexMatrix acc = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
    for (std::size_t x = 0; x < g.size(); ++x) {
        const ComplexMatrix &u = g.gates[x].matrix;
        const ComplexMatrix pair = numerics::kron(u, u.conjugate());
        acc += g.priors[x] * numerics::tensor_power(pair, t, cap);
    }
    return acc;
}

DesignCheckResult design_check(const GateSet &g, const GateSet &reference,
                               std::size_t t, const NumericConfig &cfg) {
    if (g.dimension != reference.dimension) {
        throw InvalidArgument("design check: reference acts on a different dimension");
    }
    GateSet uniform_ref = reference;
    uniform_ref.priors.assign(reference.size(),
                              1.0 / static_cast<double>(reference.size()));
    const ComplexMatrix lhs = twirl_operator(g, t, cfg.dim_cap);
    const ComplexMatrix rhs = twirl_operator(uniform_ref, t, cfg.dim_cap);
    DesignCheckResult out;
    out.t = t;
    out.residual = (lhs - rhs).norm();
    out.verdict = out.residual <= kDesignTolerance;
    return out;
}

DesignCheckResult design_check_haar_t1(const GateSet &g, const NumericConfig &cfg) {
    const ComplexMatrix lhs = twirl_operator(g, 1, cfg.dim_cap);
    const ComplexVector phi = numerics::choi_vector(
        ComplexMatrix::Identity(static_cast<Eigen::Index>(g.dimension),
                                static_cast<Eigen::Index>(g.dimension)));
    const ComplexMatrix haar = phi * phi.adjoint() / static_cast<double>(g.dimension);
    DesignCheckResult out;
    out.t = 1;
    out.residual = (lhs - haar).norm();
    out.verdict = out.residual <= kDesignTolerance;
    return out;
}

} // namespace gateid::groups
