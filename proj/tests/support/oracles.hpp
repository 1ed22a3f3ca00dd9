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

// Independent reference implementations used only by tests. They favour
// explicit index loops over the library's Eigen-based kernels.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "gateid/gatesets.hpp"

namespace oracle {

using gateid::Complex;
using gateid::ComplexMatrix;
using gateid::ComplexVector;

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

inline ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index k = 0; k < b.size(); ++k)
            out(i * b.size() + k) = a(i) * b(k);
    return out;
}

inline ComplexMatrix power(const ComplexMatrix &m, std::size_t n) {
    ComplexMatrix out = m;
    for (std::size_t i = 1; i < n; ++i) out = kron(out, m);
    return out;
}

/// (U (x) I) sum_n |n>|n> by its definition.
inline ComplexVector choi(const ComplexMatrix &u) {
    const Eigen::Index d = u.rows();
    ComplexVector phi = ComplexVector::Zero(d * d);
    for (Eigen::Index n = 0; n < d; ++n) phi(n * d + n) = 1.0;
    return kron(u, ComplexMatrix::Identity(d, d)) * phi;
}

/// Rank through the Gram matrix eigenvalues. The Gram route squares the
/// condition number, so the relative cutoff applies to sigma, not sigma^2,
/// and defaults looser than the library's.
inline std::size_t gram_rank(const std::vector<ComplexVector> &vs, double rel = 1e-6) {
    const auto k = static_cast<Eigen::Index>(vs.size());
    ComplexMatrix g(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) g(i, j) = vs[i].dot(vs[j]);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g);
    const double top = es.eigenvalues().maxCoeff();
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < k; ++i)
        if (es.eigenvalues()(i) > rel * rel * top) ++r;
    return r;
}

/// Optimal probability by building R_N explicitly from U^(x)N and taking its
/// pseudo-inverse with Eigen's complete orthogonal decomposition.
inline double pmax_explicit(const gateid::GateSet &g, std::size_t n) {
    std::vector<ComplexVector> vs;
    for (const auto &gate : g.gates) vs.push_back(choi(power(gate.matrix, n)));
    const Eigen::Index dim = vs.front().size();
    ComplexMatrix r = ComplexMatrix::Zero(dim, dim);
    for (std::size_t x = 0; x < vs.size(); ++x) r += g.priors[x] * vs[x] * vs[x].adjoint();
    Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(r);
    cod.setThreshold(1e-10);
    const ComplexMatrix rinv = cod.pseudoInverse();
    double best = 0.0;
    for (std::size_t x = 0; x < vs.size(); ++x)
        best = std::max(best, g.priors[x] * vs[x].dot(rinv * vs[x]).real());
    return best;
}

/// Haar-distributed unitary from the QR decomposition of a Ginibre matrix.
template <class Rng> ComplexMatrix random_unitary(Eigen::Index d, Rng &rng) {
    std::normal_distribution<double> nd;
    ComplexMatrix z(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) z(i, j) = Complex(nd(rng), nd(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < d; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
    return q;
}

} // namespace oracle
