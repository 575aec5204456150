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

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "idemcomm/core_linalg.hpp"

/// Factorization of an operator t that anticommutes with an involution u
/// as t = pq - qp, with p = (u + 1)/2 fixed and q an idempotent to be found.
///
/// Construction: s is a square root of t^2 + 1/4 that commutes with t and u,
/// v = 2u(s + t) is an involution with uv - vu = 4t, and q = (v + 1)/2.
/// Such an s exists exactly when, in the eigenbasis of u where
/// t = [[0, b], [c, 0]], the blocks bc + 1/4 and cb + 1/4 have square roots
/// s1, s2 with s1 b = b s2 and s2 c = c s1.
namespace idemcomm {

/// u together with bases of its +1 and -1 eigenspaces.
struct InvolutionDecomposition {
    Matrix u;
    Matrix basis1;           ///< n x dim1, spans the +1 eigenspace
    Matrix basis2;           ///< n x dim2, spans the -1 eigenspace
    Matrix change_of_basis;  ///< [basis1 | basis2]

    Index dim() const { return u.rows(); }
    Index dim1() const { return basis1.cols(); }
    Index dim2() const { return basis2.cols(); }
    /// change_of_basis^-1 * a * change_of_basis
    Matrix to_block_basis(const Matrix& a) const;
    /// change_of_basis * a * change_of_basis^-1
    Matrix from_block_basis(const Matrix& a) const;
};

/// Off-diagonal blocks of t in the eigenbasis of u: b maps X2 -> X1, c maps X1 -> X2.
struct BlockForm {
    Matrix b;  ///< dim1 x dim2
    Matrix c;  ///< dim2 x dim1

    Index dim1() const { return b.rows(); }
    Index dim2() const { return c.rows(); }
};

enum class Verdict {
    Constructed,
    ObstructedNoSquareRoot,
    SingularUndecided,
    IntertwinerMismatch,
    AnticommutationViolated,
};

std::string_view to_string(Verdict v);

struct FactorizationResult {
    Verdict verdict = Verdict::AnticommutationViolated;
    std::optional<Matrix> p;
    std::optional<Matrix> q;
    std::optional<Matrix> s;
    std::map<std::string, double> residuals;
    std::string note;
    double branch_angle = 0.0;

    bool constructed() const { return verdict == Verdict::Constructed; }
};

/// Throws NotInvolution when ||u^2 - 1|| exceeds eq_tol * max(1, ||u||^2).
InvolutionDecomposition decompose_involution(const Matrix& u, const ToleranceConfig& cfg = {});

/// Throws AnticommutationViolated when ||tu + ut|| > eq_tol * (1 + ||t|| ||u||)
/// or when the diagonal blocks of t in the block basis are not negligible.
BlockForm block_form(const Matrix& t, const InvolutionDecomposition& d, const ToleranceConfig& cfg = {});

/// [[0, b], [c, 0]] in the block basis.
Matrix assemble_block_operator(const BlockForm& bf);

/// [[0, b], [c, 0]] mapped back to the original basis.
Matrix assemble_operator(const BlockForm& bf, const InvolutionDecomposition& d);

/// r(bc) < 1/4 - rank_tol. A true result guarantees factorize succeeds.
bool sufficient_radius_check(const BlockForm& bf, const ToleranceConfig& cfg = {});

/// True iff kernel_dims(a) == (1, 2), which certifies that a has no square root.
bool square_root_obstruction(const Matrix& a, const ToleranceConfig& cfg = {});

struct CommutingSqrt {
    Matrix s;
    double branch_angle = 0.0;
};

/// Square root of t^2 + 1/4 that commutes with t and u.
///
/// Non-singular case: primary root with the cut rotated off the spectrum.
/// Singular case: throws SquareRootObstructed when bc + 1/4 or cb + 1/4
/// has kernel pattern (1, 2), SingularUndecided otherwise.
CommutingSqrt commuting_sqrt(const Matrix& t, const InvolutionDecomposition& d,
                             const ToleranceConfig& cfg = {});
CommutingSqrt commuting_sqrt(const Matrix& t, const Matrix& u, const ToleranceConfig& cfg = {});

/// Builds p = (u + 1)/2 and q with pq - qp = t, or reports why it cannot.
/// Throws NotInvolution / DimensionMismatch / NonFiniteEntry on bad input;
/// mathematical outcomes are carried in the verdict.
FactorizationResult factorize(const Matrix& t, const Matrix& u, const ToleranceConfig& cfg = {});
FactorizationResult factorize(const Matrix& t, const InvolutionDecomposition& d,
                              const ToleranceConfig& cfg = {});

}  // namespace idemcomm
