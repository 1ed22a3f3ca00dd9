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

#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "gateid/errors.hpp"
#include "gateid/gatesets.hpp"
#include "gateid/numerics.hpp"
#include "oracles.hpp"

using namespace gateid;
namespace nm = gateid::numerics;

namespace {

ComplexMatrix diag2(Complex a, Complex b) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

} // namespace

TEST_CASE("tensor_power of the identity is the identity") {
    CHECK(nm::tensor_power(ComplexMatrix(ComplexMatrix::Identity(2, 2)), 3).isApprox(ComplexMatrix::Identity(8, 8)));
}

TEST_CASE("tensor_power of diag(1, w) squares the phases") {
    const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
    const ComplexMatrix p = nm::tensor_power(diag2(1.0, w), 2);
    ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
    expect.diagonal() << 1.0, w, w, w * w;
    CHECK((p - expect).norm() < 1e-14);
}

TEST_CASE("tensor_power of X is the anti-diagonal permutation") {
    const ComplexMatrix p = nm::tensor_power(gatesets::pauli_x(), 2);
    CHECK((p - oracle::kron(gatesets::pauli_x(), gatesets::pauli_x())).norm() == 0.0);
    for (int i = 0; i < 4; ++i) {
        CHECK(p(i, 3 - i) == Complex(1.0));
    }
}

TEST_CASE("tensor_power guards the dimension cap and shape") {
    CHECK_THROWS_AS((void)nm::tensor_power(ComplexMatrix(ComplexMatrix::Identity(2, 2)), 13), CapExceeded);
    CHECK_NOTHROW((void)nm::tensor_power(ComplexMatrix(ComplexMatrix::Identity(2, 2)), 12));
    CHECK_THROWS_AS((void)nm::tensor_power(ComplexMatrix(ComplexMatrix::Identity(2, 3)), 2), InvalidArgument);
    CHECK_THROWS_AS((void)nm::tensor_power(ComplexMatrix(ComplexMatrix::Identity(2, 2)), 0), InvalidArgument);
}

TEST_CASE("tensor_power recursion matches explicit Kronecker products") {
    std::mt19937_64 rng(7);
    const ComplexMatrix u = oracle::random_unitary(3, rng);
    for (std::size_t n = 1; n <= 3; ++n) {
        const ComplexMatrix next = nm::tensor_power(u, n + 1);
        CHECK((next - oracle::kron(nm::tensor_power(u, n), u)).norm() < 1e-12);
        CHECK((next - oracle::power(u, n + 1)).norm() < 1e-12);
    }
}

TEST_CASE("choi_vector follows the row-major convention") {
    ComplexVector id(4);
    id << 1, 0, 0, 1;
    ComplexVector x(4);
    x << 0, 1, 1, 0;
    CHECK(nm::choi_vector(ComplexMatrix::Identity(2, 2)) == id);
    CHECK(nm::choi_vector(gatesets::pauli_x()) == x);
    CHECK(std::abs(nm::choi_vector(gatesets::pauli_x()).dot(nm::choi_vector(gatesets::pauli_z()))) == 0.0);
}

TEST_CASE("Choi inner products are Hilbert-Schmidt traces") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = 2 + trial % 3;
        const ComplexMatrix u = oracle::random_unitary(d, rng);
        const ComplexMatrix v = oracle::random_unitary(d, rng);
        const Complex tr = (u.adjoint() * v).trace();
        CHECK(std::abs(nm::choi_vector(u).dot(nm::choi_vector(v)) - tr) < 1e-10);
        CHECK(std::abs(nm::hs_inner(u, v) - tr) < 1e-10);
        CHECK((nm::choi_vector(u) - oracle::choi(u)).norm() < 1e-12);
    }
}

TEST_CASE("numeric_rank counts independent directions") {
    const NumericConfig cfg;
    std::vector<ComplexVector> basis{ComplexVector::Unit(2, 0), ComplexVector::Unit(2, 1)};
    CHECK(nm::numeric_rank(basis, cfg) == 2);

    ComplexVector tilted(2);
    tilted << 1.0, 1e-10;
    std::vector<ComplexVector> close{ComplexVector::Unit(2, 0), tilted};
    CHECK(nm::numeric_rank(close, cfg) == 1);

    std::vector<ComplexVector> paulis;
    for (const auto &m : {ComplexMatrix(ComplexMatrix::Identity(2, 2)), gatesets::pauli_x(),
                          gatesets::pauli_y(), gatesets::pauli_z()}) {
        paulis.push_back(nm::choi_vector(m));
    }
    CHECK(nm::numeric_rank(paulis, cfg) == 4);

    std::vector<ComplexVector> zeros{ComplexVector::Zero(3), ComplexVector::Zero(3)};
    CHECK(nm::numeric_rank(zeros, cfg) == 0);
    CHECK_THROWS_AS((void)nm::numeric_rank(std::vector<ComplexVector>{}, cfg), InvalidArgument);
    std::vector<ComplexVector> ragged{ComplexVector::Zero(2), ComplexVector::Zero(3)};
    CHECK_THROWS_AS((void)nm::numeric_rank(ragged, cfg), InvalidArgument);
}

TEST_CASE("numeric_rank ignores order and nonzero scaling") {
    const NumericConfig cfg;
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ComplexVector> vs;
        for (int i = 0; i < 4; ++i) {
            vs.push_back(oracle::random_unitary(5, rng).col(0));
        }
        vs.push_back(vs[0] + Complex(0.0, 2.0) * vs[1]);
        const std::size_t r = nm::numeric_rank(vs, cfg);
        CHECK(r == 4);
        CHECK(r == oracle::gram_rank(vs));
        std::reverse(vs.begin(), vs.end());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            vs[i] *= Complex(0.5 + static_cast<double>(i), -1.0);
        }
        CHECK(nm::numeric_rank(vs, cfg) == r);
    }
}

TEST_CASE("numeric_rank keeps full rank of Kronecker powers up to the cap") {
    const NumericConfig cfg;
    const GateSet g = gatesets::make_named_set(gatesets::Family::Pauli, {});
    std::vector<ComplexVector> vs;
    for (const auto &gate : g.gates) {
        vs.push_back(nm::tensor_power(nm::choi_vector(gate.matrix), 6));
    }
    CHECK(vs.front().size() == 4096);
    CHECK(nm::numeric_rank(vs, cfg) == 4);
}

TEST_CASE("psd_inverse_sqrt on simple spectra") {
    const NumericConfig cfg;
    const auto id = nm::psd_inverse_sqrt(ComplexMatrix::Identity(3, 3), cfg);
    CHECK(id.support_rank == 3);
    CHECK(id.inverse.isApprox(ComplexMatrix::Identity(3, 3)));
    CHECK(id.inverse_sqrt.isApprox(ComplexMatrix::Identity(3, 3)));

    const auto d = nm::psd_inverse_sqrt(diag2(4.0, 0.0), cfg);
    CHECK(d.support_rank == 1);
    CHECK((d.inverse - diag2(0.25, 0.0)).norm() < 1e-14);
    CHECK((d.inverse_sqrt - diag2(0.5, 0.0)).norm() < 1e-14);
}

TEST_CASE("psd_inverse_sqrt of the one-query Pauli operator") {
    const NumericConfig cfg;
    const GateSet g = gatesets::make_named_set(gatesets::Family::Pauli, {});
    ComplexMatrix r = ComplexMatrix::Zero(4, 4);
    ComplexMatrix r_normalized = ComplexMatrix::Zero(4, 4);
    for (const auto &gate : g.gates) {
        const ComplexVector v = oracle::choi(gate.matrix);
        r += 0.25 * v * v.adjoint();
        r_normalized += 0.25 * (v / std::sqrt(2.0)) * (v / std::sqrt(2.0)).adjoint();
    }
    // Choi vectors of norm sqrt(2): R_1 = I/2
    CHECK((r - 0.5 * ComplexMatrix::Identity(4, 4)).norm() < 1e-14);
    CHECK((nm::psd_inverse_sqrt(r, cfg).inverse - 2.0 * ComplexMatrix::Identity(4, 4)).norm() < 1e-12);
    // unit-normalized vectors: R_1 = I/4
    CHECK((nm::psd_inverse_sqrt(r_normalized, cfg).inverse - 4.0 * ComplexMatrix::Identity(4, 4)).norm() < 1e-12);
}

TEST_CASE("psd_inverse_sqrt rejects bad input") {
    const NumericConfig cfg;
    ComplexMatrix nonherm = ComplexMatrix::Identity(2, 2);
    nonherm(0, 1) = 0.5;
    CHECK_THROWS_AS((void)nm::psd_inverse_sqrt(nonherm, cfg), NumericalError);
    CHECK_THROWS_AS((void)nm::psd_inverse_sqrt(diag2(1.0, -0.5), cfg), NumericalError);
    CHECK_NOTHROW((void)nm::psd_inverse_sqrt(diag2(1.0, -1e-13), cfg));
}

TEST_CASE("psd_inverse_sqrt squares to the inverse and commutes with the input") {
    const NumericConfig cfg;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix u = oracle::random_unitary(6, rng);
        Eigen::VectorXd ev(6);
        ev << 3.0, 1.0, 0.2, 0.05, 0.0, 0.0;
        const ComplexMatrix m = u * ev.cast<Complex>().asDiagonal() * u.adjoint();
        const auto s = nm::psd_inverse_sqrt(m, cfg);
        CHECK(s.support_rank == 4);
        CHECK((s.inverse_sqrt * s.inverse_sqrt - s.inverse).norm() < 1e-9);
        CHECK((s.inverse * m - m * s.inverse).norm() < 1e-9);
        CHECK((s.inverse_sqrt * m - m * s.inverse_sqrt).norm() < 1e-9);
        CHECK((s.inverse * m - s.support).norm() < 1e-9);
    }
}

TEST_CASE("apply_on_factor agrees with the padded Kronecker product") {
    std::mt19937_64 rng(9);
    const ComplexMatrix u = oracle::random_unitary(3, rng);
    const ComplexVector psi = oracle::random_unitary(18, rng).col(0);
    const std::vector<std::size_t> dims{2, 3, 3};
    const ComplexMatrix full = oracle::kron(
        oracle::kron(ComplexMatrix::Identity(2, 2), u), ComplexMatrix::Identity(3, 3));
    CHECK((nm::apply_on_factor(psi, u, dims, 1) - full * psi).norm() < 1e-12);
}

TEST_CASE("max_entangled is normalized and diagonal") {
    const ComplexVector phi = nm::max_entangled(3);
    CHECK(std::abs(phi.norm() - 1.0) < 1e-15);
    CHECK(std::abs(phi(4) - 1.0 / std::sqrt(3.0)) < 1e-15);
    CHECK(phi(1) == Complex(0.0));
}

TEST_CASE("NumericConfig rejects tolerances outside [0, 1)") {
    NumericConfig cfg;
    CHECK_NOTHROW(cfg.check());
    cfg.rank_tol = 1.0;
    CHECK_THROWS_AS(cfg.check(), InvalidArgument);
    cfg.rank_tol = -1e-3;
    CHECK_THROWS_AS(cfg.check(), InvalidArgument);
}
