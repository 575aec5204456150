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

#include <numbers>

#include "idemcomm/core_linalg.hpp"

namespace idemcomm {

/// Principal branch: cut along the negative real axis.
inline constexpr double kPrincipalBranch = std::numbers::pi;

/// Eigenvalues whose argument lies within this many radians of the cut are
/// treated as lying on it.
inline constexpr double kCutAngleMargin = 1e-6;

enum class SqrtKernel { Serial, Parallel };

/// Primary square root by the Schur method.
///
/// m = Z T Z^* (complex Schur form); the triangular factor is rooted with
/// kernels::sqrt_upper_triangular_*, and the result is Z R Z^*. Inputs that
/// are already upper or lower triangular skip the Schur step. Every
/// eigenvalue is mapped with the same scalar branch, so the result is a
/// polynomial in m and commutes with everything m commutes with.
///
/// Throws SingularUnsupported when m is numerically singular (rank test
/// with cfg.rank_tol), EigenvalueOnCut when a nonzero eigenvalue lies on the
/// ray arg z = branch_angle.
Matrix primary_sqrt(const Matrix& m, double branch_angle = kPrincipalBranch,
                    const ToleranceConfig& cfg = {}, SqrtKernel kernel = SqrtKernel::Parallel);

/// Scaled Denman-Beavers iteration on the cut-rotated matrix. Converges to
/// the same primary root as primary_sqrt. Throws Error on non-convergence.
Matrix primary_sqrt_denman_beavers(const Matrix& m, double branch_angle = kPrincipalBranch,
                                   int max_iterations = 100);

/// Picks a cut direction that clears every nonzero eigenvalue. Tries
/// pi, pi +/- pi/8, pi +/- pi/4, ... and falls back to the middle of the
/// widest angular gap in the spectrum.
double select_branch_angle(const Vector& eigs, double zero_threshold = 0.0);

/// Smallest angular distance between the cut ray and any eigenvalue with
/// modulus above zero_threshold; +inf when there is none.
double cut_clearance(const Vector& eigs, double branch_angle, double zero_threshold = 0.0);

}  // namespace idemcomm
