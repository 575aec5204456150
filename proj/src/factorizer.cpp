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

#include "idemcomm/factorizer.hpp"

#include <algorithm>
#include <cmath>

#include "idemcomm/sqrtm.hpp"

namespace idemcomm {

namespace {

void require_operator_pair(const Matrix& t, const Matrix& u) {
    require_square(t, "t");
    require_square(u, "u");
    require_same_dim(t, u, "t and u");
    require_finite(t, "t");
    require_finite(u, "u");
}

double anticommutation_residual(const Matrix& t, const Matrix& u) { return norm_fro(t * u + u * t); }

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Constructed: return "Constructed";
        case Verdict::ObstructedNoSquareRoot: return "ObstructedNoSquareRoot";
        case Verdict::SingularUndecided: return "SingularUndecided";
        case Verdict::IntertwinerMismatch: return "IntertwinerMismatch";
        case Verdict::AnticommutationViolated: return "AnticommutationViolated";
    }
    return "Unknown";
}

Matrix InvolutionDecomposition::to_block_basis(const Matrix& a) const {
    return change_of_basis.partialPivLu().solve(a * change_of_basis);
}

Matrix InvolutionDecomposition::from_block_basis(const Matrix& a) const {
    // (W a W^-1) = ((W^-1)^T (W a)^T)^T
    const Matrix wa = change_of_basis * a;
    return change_of_basis.transpose().partialPivLu().solve(wa.transpose()).transpose();
}

InvolutionDecomposition decompose_involution(const Matrix& u, const ToleranceConfig& cfg) {
    require_square(u, "u");
    require_finite(u, "u");
    if (const auto inv = is_involution(u, cfg); !inv.holds) throw NotInvolution("u", inv.residual);

    const Index n = u.rows();
    const Matrix plus = 0.5 * (identity(n) + u);
    const Matrix minus = 0.5 * (identity(n) - u);
    InvolutionDecomposition d;
    d.u = u;
    // Both projectors are thresholded against the same scale; plus + minus = I
    // keeps it at least 1/2.
    const double scale = std::max(norm2(plus), norm2(minus));
    d.basis1 = range_basis(plus, cfg.rank_tol, scale);
    d.basis2 = range_basis(minus, cfg.rank_tol, scale);
    if (d.dim1() + d.dim2() != n) {
        throw Error("eigenspace dimensions " + std::to_string(d.dim1()) + " + " +
                    std::to_string(d.dim2()) + " do not add up to " + std::to_string(n));
    }
    d.change_of_basis.resize(n, n);
    d.change_of_basis << d.basis1, d.basis2;
    return d;
}

BlockForm block_form(const Matrix& t, const InvolutionDecomposition& d, const ToleranceConfig& cfg) {
    require_operator_pair(t, d.u);
    const double nt = norm_fro(t);
    const double anti = anticommutation_residual(t, d.u);
    if (anti > cfg.eq_tol * (1.0 + nt * norm_fro(d.u))) throw AnticommutationViolated(anti);

    const Matrix conj = d.to_block_basis(t);
    const Index n1 = d.dim1();
    const Index n2 = d.dim2();
    const double diag_blocks =
        std::max(conj.topLeftCorner(n1, n1).norm(), conj.bottomRightCorner(n2, n2).norm());
    if (diag_blocks > cfg.eq_tol * condition2(d.change_of_basis) * (1.0 + nt)) {
        throw AnticommutationViolated(diag_blocks);
    }
    return {conj.topRightCorner(n1, n2), conj.bottomLeftCorner(n2, n1)};
}

Matrix assemble_block_operator(const BlockForm& bf) {
    const Index n1 = bf.dim1();
    const Index n2 = bf.dim2();
    Matrix out = Matrix::Zero(n1 + n2, n1 + n2);
    out.topRightCorner(n1, n2) = bf.b;
    out.bottomLeftCorner(n2, n1) = bf.c;
    return out;
}

Matrix assemble_operator(const BlockForm& bf, const InvolutionDecomposition& d) {
    return d.from_block_basis(assemble_block_operator(bf));
}

bool sufficient_radius_check(const BlockForm& bf, const ToleranceConfig& cfg) {
    if (bf.dim1() == 0 || bf.dim2() == 0) return true;
    return spectral_radius(bf.b * bf.c) < 0.25 - cfg.rank_tol;
}

bool square_root_obstruction(const Matrix& a, const ToleranceConfig& cfg) {
    const KernelDims k = kernel_dims(a, cfg);
    return k.ker1 == 1 && k.ker2 == 2;
}

CommutingSqrt commuting_sqrt(const Matrix& t, const InvolutionDecomposition& d, const ToleranceConfig& cfg) {
    const BlockForm bf = block_form(t, d, cfg);
    const Index n = t.rows();
    const Matrix m = t * t + 0.25 * identity(n);

    if (kernel_dims(m, cfg).ker1 > 0) {
        const Matrix m1 = bf.b * bf.c + 0.25 * identity(bf.dim1());
        const Matrix m2 = bf.c * bf.b + 0.25 * identity(bf.dim2());
        if ((bf.dim1() > 0 && square_root_obstruction(m1, cfg)) ||
            (bf.dim2() > 0 && square_root_obstruction(m2, cfg))) {
            throw SquareRootObstructed(
                "bc + 1/4 or cb + 1/4 has kernel dimensions (1, 2) and no square root");
        }
        throw SingularUndecided("t^2 + 1/4 is singular and its kernel pattern is not (1, 2)");
    }

    const double angle = select_branch_angle(eigenvalues(m));
    return {primary_sqrt(m, angle, cfg), angle};
}

CommutingSqrt commuting_sqrt(const Matrix& t, const Matrix& u, const ToleranceConfig& cfg) {
    require_operator_pair(t, u);
    return commuting_sqrt(t, decompose_involution(u, cfg), cfg);
}

FactorizationResult factorize(const Matrix& t, const InvolutionDecomposition& d, const ToleranceConfig& cfg) {
    cfg.validate();
    require_operator_pair(t, d.u);
    const Index n = t.rows();
    const Matrix& u = d.u;
    const Matrix one = identity(n);

    FactorizationResult result;
    result.residuals["anticommutation"] = anticommutation_residual(t, u);

    BlockForm bf;
    try {
        bf = block_form(t, d, cfg);
    } catch (const AnticommutationViolated& e) {
        result.verdict = Verdict::AnticommutationViolated;
        result.note = e.what();
        return result;
    }

    CommutingSqrt cs;
    try {
        cs = commuting_sqrt(t, d, cfg);
    } catch (const SquareRootObstructed& e) {
        result.verdict = Verdict::ObstructedNoSquareRoot;
        result.note = std::string(e.what()) +
                      "; no idempotent q satisfies pq - qp = t for p = (u + 1)/2 "
                      "(other idempotent pairs are not ruled out)";
        return result;
    } catch (const SingularUndecided& e) {
        result.verdict = Verdict::SingularUndecided;
        result.note = e.what();
        return result;
    }
    result.branch_angle = cs.branch_angle;
    const Matrix& s = cs.s;

    const Matrix p = 0.5 * (u + one);
    const Matrix v = 2.0 * u * (s + t);
    const Matrix v_alt = 2.0 * (s - t) * u;
    const Matrix q = 0.5 * (v + one);

    auto& r = result.residuals;
    r["p_idempotent"] = norm_fro(p * p - p);
    r["q_idempotent"] = norm_fro(q * q - q);
    r["v_involution"] = norm_fro(v * v - one);
    r["v_two_forms"] = norm_fro(v - v_alt);
    r["commutator"] = norm_fro(p * q - q * p - t);
    r["sqrt_square"] = norm_fro(s * s - t * t - 0.25 * one);
    r["sqrt_commutes_t"] = norm_fro(s * t - t * s);
    r["sqrt_commutes_u"] = norm_fro(s * u - u * s);

    // Block-level cross-check: s = diag(s1, s2) with s1 b = b s2, s2 c = c s1.
    const Matrix sb = d.to_block_basis(s);
    const Index n1 = d.dim1();
    const Index n2 = d.dim2();
    const Matrix s1 = sb.topLeftCorner(n1, n1);
    const Matrix s2 = sb.bottomRightCorner(n2, n2);
    r["intertwine_b"] = (s1 * bf.b - bf.b * s2).norm();
    r["intertwine_c"] = (s2 * bf.c - bf.c * s1).norm();
    r["s_block_offdiag"] =
        std::max(sb.topRightCorner(n1, n2).norm(), sb.bottomLeftCorner(n2, n1).norm());

    const double ns = norm_fro(s);
    const double nt = norm_fro(t);
    const double block_scale = condition2(d.change_of_basis) * (1.0 + nt * nt + ns * ns);
    const double worst = std::max(r["intertwine_b"], r["intertwine_c"]);
    if (!(worst <= cfg.eq_tol * block_scale)) {
        result.verdict = Verdict::IntertwinerMismatch;
        result.note = "block intertwining relations s1 b = b s2, s2 c = c s1 fail beyond tolerance";
        return result;
    }

    result.verdict = Verdict::Constructed;
    result.p = p;
    result.q = q;
    result.s = s;
    return result;
}

FactorizationResult factorize(const Matrix& t, const Matrix& u, const ToleranceConfig& cfg) {
    require_operator_pair(t, u);
    return factorize(t, decompose_involution(u, cfg), cfg);
}

}  // namespace idemcomm
