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

#include "idemcomm/core_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace idemcomm {

namespace {

Eigen::VectorXd singular_values(const Matrix& a) {
    if (a.size() == 0) return Eigen::VectorXd();
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues();
}

}  // namespace

void ToleranceConfig::validate() const {
    if (!(eq_tol > 0.0 && eq_tol < 1.0)) {
        throw Error("eq_tol must lie in (0, 1), got " + std::to_string(eq_tol));
    }
    if (!(rank_tol > 0.0 && rank_tol < 1.0)) {
        throw Error("rank_tol must lie in (0, 1), got " + std::to_string(rank_tol));
    }
}

void require_square(const Matrix& a, std::string_view what) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch(std::string(what) + " is not square (" + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + ")");
    }
}

void require_finite(const Matrix& a, std::string_view what) {
    if (!a.allFinite()) {
        throw NonFiniteEntry(std::string(what) + " has a NaN or infinite entry");
    }
}

void require_same_dim(const Matrix& a, const Matrix& b, std::string_view what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) + ")");
    }
}

Matrix identity(Index n) { return Matrix::Identity(n, n); }

Matrix commutator(const Matrix& a, const Matrix& b) {
    require_square(a, "commutator lhs");
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

double norm_fro(const Matrix& a) { return a.norm(); }

double norm2(const Matrix& a) {
    const auto sv = singular_values(a);
    return sv.size() == 0 ? 0.0 : sv(0);
}

double condition2(const Matrix& a) {
    const auto sv = singular_values(a);
    if (sv.size() == 0) return 1.0;
    const double smin = sv(sv.size() - 1);
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

Index numerical_rank(const Matrix& a, double rank_tol) { return numerical_rank(a, rank_tol, -1.0); }

Index numerical_rank(const Matrix& a, double rank_tol, double scale) {
    const auto sv = singular_values(a);
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    const double threshold = rank_tol * (scale < 0.0 ? sv(0) : scale);
    Index rank = 0;
    for (Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) ++rank;
    }
    return rank;
}

Matrix range_basis(const Matrix& a, double rank_tol) { return range_basis(a, rank_tol, -1.0); }

Matrix range_basis(const Matrix& a, double rank_tol, double scale) {
    if (a.size() == 0) return Matrix(a.rows(), 0);
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double threshold = rank_tol * (scale < 0.0 ? sv(0) : scale);
    Index rank = 0;
    if (sv(0) > 0.0) {
        while (rank < sv.size() && sv(rank) > threshold) ++rank;
    }
    return svd.matrixU().leftCols(rank);
}

KernelDims kernel_dims(const Matrix& a, const ToleranceConfig& cfg) {
    require_square(a, "kernel_dims argument");
    const Index n = a.rows();
    KernelDims dims;
    // a^2 is measured against ||a||^2 so that rounding noise in a nilpotent
    // part is not mistaken for rank.
    const double scale = norm2(a);
    dims.ker1 = n - numerical_rank(a, cfg.rank_tol, scale);
    dims.ker2 = n - numerical_rank(a * a, cfg.rank_tol, scale * scale);
    // ker a is contained in ker a^2; thresholding noise must not invert that.
    dims.ker2 = std::max(dims.ker2, dims.ker1);
    return dims;
}

Vector eigenvalues(const Matrix& a) {
    require_square(a, "eigenvalues argument");
    if (a.rows() == 0) return Vector();
    Eigen::ComplexSchur<Matrix> schur(a, /*computeU=*/false);
    if (schur.info() != Eigen::Success) {
        throw EigenSolverFailure("complex Schur iteration did not converge");
    }
    return schur.matrixT().diagonal();
}

double spectral_radius(const Matrix& a) {
    const Vector ev = eigenvalues(a);
    return ev.size() == 0 ? 0.0 : ev.cwiseAbs().maxCoeff();
}

PredicateResult is_idempotent(const Matrix& a, const ToleranceConfig& cfg) {
    require_square(a, "is_idempotent argument");
    const double residual = norm_fro(a * a - a);
    const double scale = std::max(1.0, std::pow(norm_fro(a), 2));
    return {residual <= cfg.eq_tol * scale, residual};
}

PredicateResult is_involution(const Matrix& a, const ToleranceConfig& cfg) {
    require_square(a, "is_involution argument");
    const double residual = norm_fro(a * a - identity(a.rows()));
    const double scale = std::max(1.0, std::pow(norm_fro(a), 2));
    return {residual <= cfg.eq_tol * scale, residual};
}

}  // namespace idemcomm
