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

#include "gateid/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gateid/errors.hpp"

namespace gateid {

void NumericConfig::check() const {
    auto in_unit = [](double v) { return v >= 0.0 && v < 1.0; };
    if (!in_unit(rank_tol) || !in_unit(psd_tol) || !in_unit(unitarity_tol)) {
        throw InvalidArgument("tolerances must lie in [0, 1)");
    }
    if (dim_cap == 0) {
        throw InvalidArgument("dimension cap must be positive");
    }
}

namespace numerics {

std::size_t checked_pow(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
            return std::numeric_limits<std::size_t>::max();
        }
        out *= base;
    }
    return out;
}

void require_within_cap(const char *what, std::size_t dim, std::size_t cap) {
    if (dim > cap) {
        throw CapExceeded(what, dim, cap);
    }
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

ComplexMatrix tensor_power(const ComplexMatrix &m, std::size_t n,
                           std::size_t cap) {
    if (n == 0) {
        throw InvalidArgument("tensor_power: N must be at least 1");
    }
    if (m.rows() != m.cols()) {
        throw InvalidArgument("tensor_power: matrix must be square");
    }
    require_within_cap("tensor_power",
                       checked_pow(static_cast<std::size_t>(m.rows()), n), cap);
    ComplexMatrix out = m;
    for (std::size_t k = 1; k < n; ++k) {
        out = kron(out, m);
    }
    return out;
}

ComplexVector tensor_power(const ComplexVector &v, std::size_t n,
                           std::size_t cap) {
    if (n == 0) {
        throw InvalidArgument("tensor_power: N must be at least 1");
    }
    require_within_cap("tensor_power",
                       checked_pow(static_cast<std::size_t>(v.size()), n), cap);
    ComplexVector out = v;
    for (std::size_t k = 1; k < n; ++k) {
        out = kron(out, v);
    }
    return out;
}

ComplexVector choi_vector(const ComplexMatrix &u) {
    if (u.rows() != u.cols()) {
        throw InvalidArgument("choi_vector: matrix must be square");
    }
    const Eigen::Index d = u.rows();
    ComplexVector out(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            out(i * d + j) = u(i, j);
        }
    }
    return out;
}

Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument("hs_inner: shape mismatch");
    }
    return (a.adjoint() * b).trace();
}

std::size_t numeric_rank(const ComplexMatrix &m, const NumericConfig &cfg) {
    if (m.size() == 0) {
        return 0;
    }
    // The smaller Gram side would square the condition number; go through
    // the SVD of the thin factor instead.
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    const auto &sv = svd.singularValues();
    const double top = sv.size() > 0 ? sv.maxCoeff() : 0.0;
    if (!(top > 0.0)) {
        return 0;
    }
    const double cut = cfg.rank_tol * top;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cut) {
            ++rank;
        }
    }
    return rank;
}

std::size_t numeric_rank(std::span<const ComplexVector> vectors,
                         const NumericConfig &cfg) {
    if (vectors.empty()) {
        throw InvalidArgument("numeric_rank: empty vector list");
    }
    const Eigen::Index len = vectors.front().size();
    ComplexMatrix cols(len, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (vectors[k].size() != len) {
            throw InvalidArgument("numeric_rank: vectors of unequal length");
        }
        cols.col(static_cast<Eigen::Index>(k)) = vectors[k];
    }
    return numeric_rank(cols, cfg);
}

double hermiticity_defect(const ComplexMatrix &m) {
    return (m - m.adjoint()).norm();
}

double unitarity_defect(const ComplexMatrix &u) {
    if (u.rows() != u.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()))
        .norm();
}

namespace {

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &m) {
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

} // namespace

double min_eigenvalue(const ComplexMatrix &m) {
    return hermitian_eigenvalues(m).minCoeff();
}

double max_eigenvalue(const ComplexMatrix &m) {
    return hermitian_eigenvalues(m).maxCoeff();
}

bool all_finite(const ComplexMatrix &m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const Complex z = m.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

PsdSpectralResult psd_inverse_sqrt(const ComplexMatrix &m,
                                   const NumericConfig &cfg) {
    if (m.rows() != m.cols()) {
        throw InvalidArgument("psd_inverse_sqrt: matrix must be square");
    }
    const Eigen::Index dim = m.rows();
    const double herm = hermiticity_defect(m);
    if (herm > cfg.psd_tol * std::max(1.0, m.norm())) {
        throw NumericalError("psd_inverse_sqrt: matrix is not Hermitian "
                             "(defect " + std::to_string(herm) + ")");
    }
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    const Eigen::VectorXd &ev = es.eigenvalues();
    const ComplexMatrix &vecs = es.eigenvectors();

    double scale = dim > 0 ? h.trace().real() / static_cast<double>(dim) : 1.0;
    if (!(scale > 0.0)) {
        scale = 1.0;
    }
    const double cut = cfg.psd_tol * scale;

    Eigen::VectorXd inv = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd inv_sqrt = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd sqrt = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd supp = Eigen::VectorXd::Zero(dim);
    PsdSpectralResult out;
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (ev(i) < -cut) {
            throw NumericalError("psd_inverse_sqrt: negative eigenvalue " +
                                 std::to_string(ev(i)));
        }
        if (ev(i) > cut) {
            inv(i) = 1.0 / ev(i);
            inv_sqrt(i) = 1.0 / std::sqrt(ev(i));
            sqrt(i) = std::sqrt(ev(i));
            supp(i) = 1.0;
            ++out.support_rank;
        }
    }
    auto spectral = [&](const Eigen::VectorXd &f) -> ComplexMatrix {
        return vecs * f.cast<Complex>().asDiagonal() * vecs.adjoint();
    };
    out.inverse = spectral(inv);
    out.inverse_sqrt = spectral(inv_sqrt);
    out.sqrt = spectral(sqrt);
    out.support = spectral(supp);
    return out;
}

ComplexVector apply_on_factor(const ComplexVector &state,
                              const ComplexMatrix &u,
                              std::span<const std::size_t> dims,
                              std::size_t slot) {
    if (slot >= dims.size()) {
        throw InvalidArgument("apply_on_factor: slot out of range");
    }
    const auto d = static_cast<Eigen::Index>(dims[slot]);
    if (u.rows() != d || u.cols() != d) {
        throw InvalidArgument("apply_on_factor: operator/factor mismatch");
    }
    Eigen::Index outer = 1;
    for (std::size_t k = 0; k < slot; ++k) {
        outer *= static_cast<Eigen::Index>(dims[k]);
    }
    Eigen::Index inner = 1;
    for (std::size_t k = slot + 1; k < dims.size(); ++k) {
        inner *= static_cast<Eigen::Index>(dims[k]);
    }
    if (outer * d * inner != state.size()) {
        throw InvalidArgument("apply_on_factor: state length mismatch");
    }
    ComplexVector out(state.size());
    ComplexMatrix block(d, inner);
    for (Eigen::Index o = 0; o < outer; ++o) {
        const Eigen::Index base = o * d * inner;
        for (Eigen::Index a = 0; a < d; ++a) {
            block.row(a) = state.segment(base + a * inner, inner).transpose();
        }
        const ComplexMatrix moved = u * block;
        for (Eigen::Index a = 0; a < d; ++a) {
            out.segment(base + a * inner, inner) = moved.row(a).transpose();
        }
    }
    return out;
}

ComplexVector max_entangled(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    ComplexVector out = ComplexVector::Zero(n * n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index k = 0; k < n; ++k) {
        out(k * n + k) = amp;
    }
    return out;
}

} // namespace numerics
} // namespace gateid
