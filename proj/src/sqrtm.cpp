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

#include "idemcomm/sqrtm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "idemcomm/kernels.hpp"

namespace idemcomm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPreferredClearance = std::numbers::pi / 32.0;

double angular_distance(double a, double b) { return std::abs(std::remainder(a - b, kTwoPi)); }

bool exactly_upper_triangular(const Matrix& m) {
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = j + 1; i < m.rows(); ++i) {
            if (m(i, j) != Complex(0.0, 0.0)) return false;
        }
    }
    return true;
}

Matrix triangular_root(const Matrix& t, double branch_angle, SqrtKernel kernel) {
    return kernel == SqrtKernel::Serial ? kernels::sqrt_upper_triangular_serial(t, branch_angle)
                                        : kernels::sqrt_upper_triangular_parallel(t, branch_angle);
}

void check_diagonal(const Matrix& t, double branch_angle) {
    for (Index i = 0; i < t.rows(); ++i) {
        const Complex z = t(i, i);
        if (z == Complex(0.0, 0.0)) {
            throw SingularUnsupported("zero eigenvalue: no primary square root");
        }
        if (angular_distance(std::arg(z), branch_angle) < kCutAngleMargin) {
            throw EigenvalueOnCut(branch_angle, "eigenvalue (" + std::to_string(z.real()) + ", " +
                                                    std::to_string(z.imag()) +
                                                    ") lies on the branch cut");
        }
    }
}

double log_abs_det(const Eigen::PartialPivLU<Matrix>& lu) {
    double acc = 0.0;
    const auto& packed = lu.matrixLU();
    for (Index i = 0; i < packed.rows(); ++i) acc += std::log(std::abs(packed(i, i)));
    return acc;
}

}  // namespace

double cut_clearance(const Vector& eigs, double branch_angle, double zero_threshold) {
    double best = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < eigs.size(); ++i) {
        if (std::abs(eigs(i)) <= zero_threshold) continue;
        best = std::min(best, angular_distance(std::arg(eigs(i)), branch_angle));
    }
    return best;
}

double select_branch_angle(const Vector& eigs, double zero_threshold) {
    const double step = std::numbers::pi / 8.0;
    for (int k = 0; k <= 8; ++k) {
        for (int sign : {+1, -1}) {
            const double angle = kPrincipalBranch + sign * k * step;
            if (cut_clearance(eigs, angle, zero_threshold) >= kPreferredClearance) return angle;
            if (k == 0) break;
        }
    }

    // Dense spectrum: bisect the widest gap between consecutive arguments.
    std::vector<double> args;
    for (Index i = 0; i < eigs.size(); ++i) {
        if (std::abs(eigs(i)) > zero_threshold) args.push_back(std::arg(eigs(i)));
    }
    if (args.empty()) return kPrincipalBranch;
    std::sort(args.begin(), args.end());
    double widest = args.front() + kTwoPi - args.back();
    double angle = args.back() + widest / 2.0;
    for (std::size_t i = 1; i < args.size(); ++i) {
        const double gap = args[i] - args[i - 1];
        if (gap > widest) {
            widest = gap;
            angle = args[i - 1] + gap / 2.0;
        }
    }
    return angle;
}

Matrix primary_sqrt(const Matrix& m, double branch_angle, const ToleranceConfig& cfg,
                    SqrtKernel kernel) {
    require_square(m, "primary_sqrt argument");
    require_finite(m, "primary_sqrt argument");
    const Index n = m.rows();
    if (n == 0) return m;
    if (numerical_rank(m, cfg.rank_tol) < n) {
        throw SingularUnsupported("matrix is numerically singular: no primary square root");
    }

    if (exactly_upper_triangular(m)) {
        check_diagonal(m, branch_angle);
        return triangular_root(m, branch_angle, kernel);
    }
    if (exactly_upper_triangular(m.transpose())) {
        // f(m^T) = f(m)^T for primary functions.
        const Matrix mt = m.transpose();
        check_diagonal(mt, branch_angle);
        return triangular_root(mt, branch_angle, kernel).transpose();
    }

    Eigen::ComplexSchur<Matrix> schur(m);
    if (schur.info() != Eigen::Success) {
        throw EigenSolverFailure("complex Schur iteration did not converge");
    }
    const Matrix& t = schur.matrixT();
    const Matrix& z = schur.matrixU();
    check_diagonal(t, branch_angle);
    const Matrix r = triangular_root(t, branch_angle, kernel);
    return z * r * z.adjoint();
}

Matrix primary_sqrt_denman_beavers(const Matrix& m, double branch_angle, int max_iterations) {
    require_square(m, "primary_sqrt_denman_beavers argument");
    require_finite(m, "primary_sqrt_denman_beavers argument");
    const Index n = m.rows();
    if (n == 0) return m;

    const double shift = branch_angle - kPrincipalBranch;
    const Complex rot = std::polar(1.0, -shift);
    const Complex half_back = std::polar(1.0, shift / 2.0);

    Matrix y = m * rot;
    Matrix z = identity(n);
    bool scaling = true;
    double previous_change = std::numeric_limits<double>::infinity();
    const double tol = std::sqrt(static_cast<double>(n)) * std::numeric_limits<double>::epsilon();

    for (int iter = 0; iter < max_iterations; ++iter) {
        const Eigen::PartialPivLU<Matrix> lu_y(y);
        const Eigen::PartialPivLU<Matrix> lu_z(z);
        // Determinant scaling, |det(y) det(z)|^(-1/(2n)), while far from convergence.
        double mu = 1.0;
        if (scaling) {
            mu = std::exp(-(log_abs_det(lu_y) + log_abs_det(lu_z)) / (2.0 * static_cast<double>(n)));
            if (!std::isfinite(mu)) throw SingularUnsupported("Denman-Beavers: singular iterate");
        }
        const Matrix y_inv = lu_y.inverse();
        const Matrix z_inv = lu_z.inverse();
        Matrix y_next = 0.5 * (mu * y + z_inv / mu);
        Matrix z_next = 0.5 * (mu * z + y_inv / mu);
        const double change = (y_next - y).norm() / std::max(y_next.norm(), 1e-300);
        y = std::move(y_next);
        z = std::move(z_next);
        if (!y.allFinite()) break;
        if (change < 1e-2) scaling = false;
        if (change <= tol) return half_back * y;
        // Rounding floor: quadratic convergence has stalled.
        if (!scaling && change < 1e-10 && change >= previous_change) return half_back * y;
        previous_change = change;
    }
    throw Error("Denman-Beavers iteration did not converge in " + std::to_string(max_iterations) +
                " steps");
}

}  // namespace idemcomm
