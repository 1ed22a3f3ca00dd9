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

#include "gateid/gatesets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "gateid/errors.hpp"

namespace gateid {

bool GateSet::has_uniform_priors(double tol) const {
    if (priors.empty()) {
        return true;
    }
    const double u = 1.0 / static_cast<double>(priors.size());
    return std::all_of(priors.begin(), priors.end(),
                       [&](double p) { return std::abs(p - u) <= tol; });
}

double GateSet::max_prior() const {
    return priors.empty() ? 0.0 : *std::max_element(priors.begin(), priors.end());
}

std::vector<std::string> GateSet::labels() const {
    std::vector<std::string> out;
    out.reserve(gates.size());
    for (const auto &g : gates) {
        out.push_back(g.label);
    }
    return out;
}

std::optional<std::size_t> GateSet::find(std::string_view label) const {
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (gates[i].label == label) {
            return i;
        }
    }
    return std::nullopt;
}

namespace gatesets {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex root_of_unity(std::size_t order, std::size_t power) {
    const double angle =
        kTwoPi * static_cast<double>(power % order) / static_cast<double>(order);
    return std::polar(1.0, angle);
}

std::vector<double> uniform(std::size_t n) {
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

void require_at_least(const char *name, std::size_t value, std::size_t min) {
    if (value < min) {
        throw InvalidArgument(std::string(name) + " must be at least " +
                              std::to_string(min));
    }
}

GateSet phase_point(std::size_t k, std::size_t d) {
    GateSet g;
    g.dimension = d;
    for (std::size_t x = 1; x <= k; ++x) {
        ComplexMatrix u = ComplexMatrix::Identity(d, d);
        u(1, 1) = root_of_unity(k, x);
        g.gates.push_back({std::to_string(x), u});
    }
    return g;
}

GateSet clock(std::size_t d, std::size_t k) {
    GateSet g;
    g.dimension = d;
    for (std::size_t x = 0; x < k; ++x) {
        ComplexMatrix u = ComplexMatrix::Zero(d, d);
        for (std::size_t y = 0; y < d; ++y) {
            u(y, y) = root_of_unity(k, x * y);
        }
        g.gates.push_back({std::to_string(x), u});
    }
    return g;
}

GateSet shift_multiply(std::size_t d) {
    const ComplexMatrix s = shift_operator(d);
    const ComplexMatrix m = multiply_operator(d);
    GateSet g;
    g.dimension = d;
    ComplexMatrix sp = ComplexMatrix::Identity(d, d);
    for (std::size_t p = 0; p < d; ++p) {
        ComplexMatrix mq = ComplexMatrix::Identity(d, d);
        for (std::size_t q = 0; q < d; ++q) {
            g.gates.push_back(
                {std::to_string(p) + "," + std::to_string(q), sp * mq});
            mq = mq * m;
        }
        sp = sp * s;
    }
    return g;
}

GateSet permutation(std::size_t d) {
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    GateSet g;
    g.dimension = d;
    do {
        ComplexMatrix u = ComplexMatrix::Zero(d, d);
        std::string label;
        for (std::size_t k = 0; k < d; ++k) {
            u(perm[k], k) = 1.0;
            label += std::to_string(perm[k] + 1);
        }
        g.gates.push_back({label, u});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return g;
}

GateSet grover(std::size_t d) {
    GateSet g;
    g.dimension = d;
    for (std::size_t x = 0; x < d; ++x) {
        ComplexMatrix u = ComplexMatrix::Identity(d, d);
        u(x, x) = -1.0;
        g.gates.push_back({std::to_string(x + 1), u});
    }
    return g;
}

GateSet hadamard_rotations(std::size_t k) {
    GateSet g;
    g.dimension = 2;
    g.gates.push_back({"H", hadamard()});
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const Complex i(0.0, 1.0);
    for (std::size_t j = 1; j <= k; ++j) {
        const double a = kTwoPi * static_cast<double>(j) / static_cast<double>(k);
        g.gates.push_back(
            {"R" + std::to_string(j), std::cos(a) * id + i * std::sin(a) * pauli_x()});
    }
    return g;
}

} // namespace

ComplexMatrix shift_operator(std::size_t d) {
    ComplexMatrix s = ComplexMatrix::Zero(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        s((k + 1) % d, k) = 1.0;
    }
    return s;
}

ComplexMatrix multiply_operator(std::size_t d) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (std::size_t k = 1; k <= d; ++k) {
        m(k - 1, k - 1) = root_of_unity(d, k);
    }
    return m;
}

ComplexMatrix hadamard() {
    ComplexMatrix h(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    h << r, r, r, -r;
    return h;
}

ComplexMatrix pauli_x() {
    ComplexMatrix x(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    return x;
}

ComplexMatrix pauli_y() {
    ComplexMatrix y(2, 2);
    y << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return y;
}

ComplexMatrix pauli_z() {
    ComplexMatrix z(2, 2);
    z << 1.0, 0.0, 0.0, -1.0;
    return z;
}

std::string_view family_name(Family f) {
    switch (f) {
    case Family::PhasePoint:
        return "phase_point";
    case Family::Clock:
        return "clock";
    case Family::ShiftMultiply:
        return "shift_multiply";
    case Family::Permutation:
        return "permutation";
    case Family::Grover:
        return "grover";
    case Family::Pauli:
        return "pauli";
    case Family::HadamardRotations:
        return "hadamard_rotations";
    }
    return "unknown";
}

std::string_view family_parameters(Family f) {
    switch (f) {
    case Family::PhasePoint:
    case Family::Clock:
        return "K, d";
    case Family::ShiftMultiply:
    case Family::Permutation:
    case Family::Grover:
        return "d";
    case Family::Pauli:
        return "";
    case Family::HadamardRotations:
        return "K";
    }
    return "";
}

std::string_view family_description(Family f) {
    switch (f) {
    case Family::PhasePoint:
        return "w^x|1><1| + (I - |1><1|), w = e^(2 pi i/K), x = 1..K";
    case Family::Clock:
        return "sum_y w^(xy)|y><y|, w = e^(2 pi i/K), x = 0..K-1";
    case Family::ShiftMultiply:
        return "S^p M^q, p, q in Z_d";
    case Family::Permutation:
        return "sum_k |pi(k)><k| for every pi in S_d (d <= 6)";
    case Family::Grover:
        return "I - 2|x><x|, x = 1..d";
    case Family::Pauli:
        return "shift_multiply with d = 2";
    case Family::HadamardRotations:
        return "H and cos(2 pi j/K) I + i sin(2 pi j/K) X, j = 1..K";
    }
    return "";
}

std::vector<Family> all_families() {
    return {Family::PhasePoint,  Family::Clock,  Family::ShiftMultiply,
            Family::Permutation, Family::Grover, Family::Pauli,
            Family::HadamardRotations};
}

Family parse_family(std::string_view name) {
    for (Family f : all_families()) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw InvalidArgument("unknown gate family '" + std::string(name) + "'");
}

GateSet make_named_set(Family family, const FamilyParams &params) {
    GateSet g;
    switch (family) {
    case Family::PhasePoint:
        require_at_least("K", params.k, 2);
        require_at_least("d", params.d, 2);
        g = phase_point(params.k, params.d);
        break;
    case Family::Clock:
        require_at_least("K", params.k, 2);
        require_at_least("d", params.d, 2);
        g = clock(params.d, params.k);
        break;
    case Family::ShiftMultiply:
        require_at_least("d", params.d, 2);
        g = shift_multiply(params.d);
        break;
    case Family::Permutation:
        require_at_least("d", params.d, 2);
        if (params.d > 6) {
            throw InvalidArgument("permutation family supports d <= 6");
        }
        g = permutation(params.d);
        break;
    case Family::Grover:
        require_at_least("d", params.d, 2);
        g = grover(params.d);
        break;
    case Family::Pauli:
        g = shift_multiply(2);
        g.gates[0].label = "I";
        g.gates[1].label = "-Z";
        g.gates[2].label = "X";
        g.gates[3].label = "iY";
        break;
    case Family::HadamardRotations:
        require_at_least("K", params.k, 2);
        g = hadamard_rotations(params.k);
        break;
    }
    g.priors = uniform(g.gates.size());
    return g;
}

GateSet from_matrices(std::vector<Gate> gates) {
    GateSet g;
    g.dimension = gates.empty() ? 0 : static_cast<std::size_t>(gates.front().matrix.rows());
    g.priors = uniform(gates.size());
    g.gates = std::move(gates);
    return g;
}

bool ValidationReport::ok() const {
    return shape_ok && enough_gates && labels_unique && finite &&
           non_unitary.empty() && duplicates_up_to_phase.empty() &&
           priors_nonnegative && priors_normalized && priors_aligned;
}

std::string ValidationReport::summary() const {
    if (ok()) {
        return "gate set valid";
    }
    std::ostringstream os;
    os << "gate set invalid:";
    for (const auto &m : messages) {
        os << "\n  - " << m;
    }
    return os.str();
}

ValidationReport validate_gate_set(const GateSet &g, const NumericConfig &cfg) {
    ValidationReport r;
    const auto d = static_cast<Eigen::Index>(g.dimension);
    if (g.gates.size() < 2) {
        r.enough_gates = false;
        r.messages.push_back("fewer than two gates");
    }
    std::set<std::string> seen;
    for (const auto &gate : g.gates) {
        if (!seen.insert(gate.label).second) {
            r.labels_unique = false;
            r.messages.push_back("duplicate label '" + gate.label + "'");
        }
        if (gate.matrix.rows() != d || gate.matrix.cols() != d) {
            r.shape_ok = false;
            r.messages.push_back("gate '" + gate.label + "' is not " +
                                 std::to_string(d) + "x" + std::to_string(d));
        } else if (!numerics::all_finite(gate.matrix)) {
            r.finite = false;
            r.messages.push_back("gate '" + gate.label + "' has non-finite entries");
        }
    }
    if (g.dimension == 0) {
        r.shape_ok = false;
        r.messages.push_back("dimension must be positive");
    }
    if (r.shape_ok && r.finite) {
        for (std::size_t i = 0; i < g.gates.size(); ++i) {
            const double res = numerics::unitarity_defect(g.gates[i].matrix);
            r.unitarity_residuals.push_back(res);
            if (res > cfg.unitarity_tol) {
                r.non_unitary.push_back(i);
                r.messages.push_back("gate '" + g.gates[i].label +
                                     "' not unitary (residual " +
                                     format_real(res) + ")");
            }
        }
        const ComplexMatrix id = ComplexMatrix::Identity(d, d);
        for (std::size_t i = 0; i < g.gates.size(); ++i) {
            for (std::size_t j = i + 1; j < g.gates.size(); ++j) {
                const ComplexMatrix a =
                    g.gates[i].matrix.adjoint() * g.gates[j].matrix;
                const Complex tau = a.trace() / static_cast<double>(d);
                const double res = (a - tau * id).norm();
                if (res <= cfg.unitarity_tol && std::abs(std::abs(tau) - 1.0) <=
                                                    cfg.unitarity_tol) {
                    r.duplicates_up_to_phase.push_back({i, j, res});
                    r.messages.push_back("gates '" + g.gates[i].label + "' and '" +
                                         g.gates[j].label +
                                         "' are equal up to a global phase");
                }
            }
        }
    }
    if (g.priors.size() != g.gates.size()) {
        r.priors_aligned = false;
        r.messages.push_back("priors not aligned with gates");
    }
    r.prior_sum = std::accumulate(g.priors.begin(), g.priors.end(), 0.0);
    for (double p : g.priors) {
        if (!(p >= 0.0)) {
            r.priors_nonnegative = false;
        }
    }
    if (!r.priors_nonnegative) {
        r.messages.push_back("negative prior");
    }
    if (std::abs(r.prior_sum - 1.0) > 1e-12) {
        r.priors_normalized = false;
        r.messages.push_back("priors sum to " + format_real(r.prior_sum) +
                             ", not 1");
    }
    return r;
}

void require_valid(const GateSet &g, const NumericConfig &cfg) {
    const ValidationReport r = validate_gate_set(g, cfg);
    if (!r.ok()) {
        throw ValidationError(r.summary());
    }
}

} // namespace gatesets
} // namespace gateid
