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
 * Dense complex linear algebra used by every other module: Kronecker
 * powers, Choi vectorization, tolerance-aware rank and spectral functions
 * of positive semidefinite matrices.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gateid {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Tolerances shared by all numerical decisions.
struct NumericConfig {
    /// Singular values below rank_tol * sigma_max count as zero.
    double rank_tol = 1e-8;
    /// Eigenvalues below psd_tol * (trace / dim) count as zero.
    double psd_tol = 1e-10;
    /// Allowed ||U^dag U - I||_F for a gate to count as unitary.
    double unitarity_tol = 1e-9;
    /// Largest Hilbert-space dimension any operation may materialize.
    std::size_t dim_cap = 4096;

    /// Throws InvalidArgument unless every tolerance lies in [0, 1).
    void check() const;
};

namespace numerics {

/// Overflow-safe integer power; returns SIZE_MAX on overflow.
[[nodiscard]] std::size_t checked_pow(std::size_t base, std::size_t exp);

/// Throws CapExceeded when `dim` is above `cap`.
void require_within_cap(const char *what, std::size_t dim, std::size_t cap);

[[nodiscard]] ComplexMatrix kron(const ComplexMatrix &a,
                                 const ComplexMatrix &b);
[[nodiscard]] ComplexVector kron(const ComplexVector &a,
                                 const ComplexVector &b);

/**
 * N-fold Kronecker power M^{(x)N}. M must be square and rows^N must not
 * exceed `cap`.
 */
[[nodiscard]] ComplexMatrix tensor_power(const ComplexMatrix &m, std::size_t n,
                                         std::size_t cap = 4096);

/// N-fold Kronecker power of a vector, subject to the same cap.
[[nodiscard]] ComplexVector tensor_power(const ComplexVector &v, std::size_t n,
                                         std::size_t cap = 4096);

/**
 * |U>> = (U (x) I) sum_n |n>|n> = sum_ij U_ij |i>|j>, with the system
 * index i most significant. <<U|V>> = Tr(U^dag V).
 */
[[nodiscard]] ComplexVector choi_vector(const ComplexMatrix &u);

/// Hilbert-Schmidt inner product Tr(A^dag B).
[[nodiscard]] Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

/**
 * Number of singular values of the column matrix [v_1 ... v_k] that exceed
 * rank_tol times the largest one. Returns 0 only for all-zero input.
 */
[[nodiscard]] std::size_t numeric_rank(std::span<const ComplexVector> vectors,
                                       const NumericConfig &cfg);

/// Rank of the columns of `m` under the same rule.
[[nodiscard]] std::size_t numeric_rank(const ComplexMatrix &m,
                                       const NumericConfig &cfg);

struct PsdSpectralResult {
    ComplexMatrix inverse;      ///< M^+ (inverse on the support)
    ComplexMatrix inverse_sqrt; ///< (M^+)^{1/2}
    ComplexMatrix sqrt;         ///< M^{1/2}, clamped at zero
    ComplexMatrix support;      ///< orthogonal projector onto the support
    std::size_t support_rank = 0;
};

/**
 * Spectral inverse and inverse square root of a positive semidefinite
 * matrix on its support. Eigenvalues below psd_tol * trace/dim are treated
 * as exact zeros; an eigenvalue below -psd_tol * trace/dim, or a
 * Hermiticity defect above psd_tol * max(1, ||M||_F), raises
 * NumericalError.
 */
[[nodiscard]] PsdSpectralResult psd_inverse_sqrt(const ComplexMatrix &m,
                                                 const NumericConfig &cfg);

/// ||M - M^dag||_F.
[[nodiscard]] double hermiticity_defect(const ComplexMatrix &m);

/// ||U^dag U - I||_F.
[[nodiscard]] double unitarity_defect(const ComplexMatrix &u);

/// Smallest eigenvalue of the Hermitian part of `m`.
[[nodiscard]] double min_eigenvalue(const ComplexMatrix &m);

/// Largest eigenvalue of the Hermitian part of `m`.
[[nodiscard]] double max_eigenvalue(const ComplexMatrix &m);

/// True when every entry is finite.
[[nodiscard]] bool all_finite(const ComplexMatrix &m);

/**
 * Applies `u` (d x d) to tensor factor `slot` of a vector living on
 * C^{dims[0]} (x) ... (x) C^{dims[k-1]}, first factor most significant.
 */
[[nodiscard]] ComplexVector apply_on_factor(const ComplexVector &state,
                                            const ComplexMatrix &u,
                                            std::span<const std::size_t> dims,
                                            std::size_t slot);

/// Normalized maximally entangled vector sum_n |n>|n> / sqrt(d).
[[nodiscard]] ComplexVector max_entangled(std::size_t d);

} // namespace numerics
} // namespace gateid
