/*
 * Copyright 2026 The idemcomm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "idemcomm/errors.hpp"

namespace idemcomm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Tolerances shared by every floating-point decision in the library.
///
/// eq_tol is relative: identity checks compare a residual against
/// eq_tol times a problem-dependent scale. rank_tol is a relative
/// singular-value threshold, i.e. sigma_i counts as zero when
/// sigma_i <= rank_tol * sigma_max.
struct ToleranceConfig {
    double eq_tol = 1e-8;
    double rank_tol = 1e-10;

    /// Throws idemcomm::Error unless both values lie in (0, 1).
    void validate() const;
};

void require_square(const Matrix& a, std::string_view what);
void require_finite(const Matrix& a, std::string_view what);
void require_same_dim(const Matrix& a, const Matrix& b, std::string_view what);

Matrix identity(Index n);

/// ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

double norm_fro(const Matrix& a);
/// Largest singular value.
double norm2(const Matrix& a);
/// sigma_max / sigma_min; +inf for singular input.
double condition2(const Matrix& a);

/// Number of singular values above rank_tol * sigma_max.
Index numerical_rank(const Matrix& a, double rank_tol);
/// Singular values above rank_tol * scale.
Index numerical_rank(const Matrix& a, double rank_tol, double scale);

/// Orthonormal basis of range(a), one column per singular value above
/// rank_tol * scale. The first overload uses scale = sigma_max(a).
Matrix range_basis(const Matrix& a, double rank_tol);
Matrix range_basis(const Matrix& a, double rank_tol, double scale);

struct KernelDims {
    Index ker1 = 0;  ///< dim ker a
    Index ker2 = 0;  ///< dim ker a^2
    friend bool operator==(const KernelDims&, const KernelDims&) = default;
};

KernelDims kernel_dims(const Matrix& a, const ToleranceConfig& cfg = {});

/// Eigenvalues through a complex Schur decomposition.
/// Throws EigenSolverFailure if the QR iteration does not converge.
Vector eigenvalues(const Matrix& a);

double spectral_radius(const Matrix& a);

struct PredicateResult {
    bool holds = false;
    double residual = 0.0;
};

/// ||a^2 - a|| <= eq_tol * max(1, ||a||^2).
PredicateResult is_idempotent(const Matrix& a, const ToleranceConfig& cfg = {});
/// ||a^2 - I|| <= eq_tol * max(1, ||a||^2).
PredicateResult is_involution(const Matrix& a, const ToleranceConfig& cfg = {});

}  // namespace idemcomm
