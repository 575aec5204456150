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

#include "idemcomm/core_linalg.hpp"

/// Square root of an upper-triangular matrix.
///
/// Both kernels evaluate the same recurrence
///
///   r(i,i) = sqrt_branch(t(i,i))
///   r(i,j) = (t(i,j) - sum_{k=i+1}^{j-1} r(i,k) r(k,j)) / (r(i,i) + r(j,j))
///
/// with the inner sum accumulated in ascending k, so their outputs agree
/// bit for bit. The serial kernel sweeps columns left to right; the parallel
/// kernel sweeps superdiagonals, whose entries depend only on earlier
/// superdiagonals and can be filled concurrently.
namespace idemcomm::kernels {

/// Scalar square root with the branch cut on the ray arg z = branch_angle.
Complex branch_sqrt(Complex z, double branch_angle);

/// Column-by-column reference kernel.
Matrix sqrt_upper_triangular_serial(const Matrix& t, double branch_angle);

/// OpenMP wavefront kernel.
Matrix sqrt_upper_triangular_parallel(const Matrix& t, double branch_angle);

}  // namespace idemcomm::kernels
