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

#include "idemcomm/kernels.hpp"

#include <cmath>
#include <numbers>

namespace idemcomm::kernels {

namespace {

inline Complex entry(const Matrix& t, const Matrix& r, Index i, Index j) {
    Complex acc = t(i, j);
    for (Index k = i + 1; k < j; ++k) acc -= r(i, k) * r(k, j);
    return acc / (r(i, i) + r(j, j));
}

}  // namespace

Complex branch_sqrt(Complex z, double branch_angle) {
    // Rotate the cut onto the negative real axis, take the principal root,
    // rotate back by half the angle.
    const double shift = branch_angle - std::numbers::pi;
    const Complex rot = std::polar(1.0, -shift);
    const Complex half_back = std::polar(1.0, shift / 2.0);
    return half_back * std::sqrt(z * rot);
}

Matrix sqrt_upper_triangular_serial(const Matrix& t, double branch_angle) {
    const Index n = t.rows();
    Matrix r = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) r(i, i) = branch_sqrt(t(i, i), branch_angle);
    for (Index j = 1; j < n; ++j) {
        for (Index i = j - 1; i >= 0; --i) r(i, j) = entry(t, r, i, j);
    }
    return r;
}

Matrix sqrt_upper_triangular_parallel(const Matrix& t, double branch_angle) {
    const Index n = t.rows();
    Matrix r = Matrix::Zero(n, n);
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < n; ++i) r(i, i) = branch_sqrt(t(i, i), branch_angle);
    for (Index d = 1; d < n; ++d) {
#pragma omp parallel for schedule(static)
        for (Index i = 0; i < n - d; ++i) r(i, i + d) = entry(t, r, i, i + d);
    }
    return r;
}

}  // namespace idemcomm::kernels
