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

#include <doctest.h>

#include <array>
#include <cmath>

#include "idemcomm/factorizer.hpp"
#include "support/generators.hpp"

using namespace idemcomm;

namespace {

Matrix m2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

Matrix diag(std::initializer_list<double> d) {
    Matrix m = Matrix::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
    Index k = 0;
    for (double x : d) m(k, k) = x, ++k;
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    return m;
}

Matrix scalar(Complex x) { return Matrix::Constant(1, 1, x); }

/// Orthogonal projector onto the column span of a (n x k).
Matrix projector(const Matrix& a) { return a * (a.adjoint() * a).inverse() * a.adjoint(); }

const double kR3 = std::sqrt(3.0) / 2.0;

}  // namespace

TEST_CASE("decompose_involution examples") {
    const auto d = decompose_involution(diag({1, -1, 1}));
    REQUIRE(d.dim1() == 2);
    REQUIRE(d.dim2() == 1);
    CHECK((projector(d.basis1) - diag({1, 0, 1})).norm() < 1e-14);
    CHECK((projector(d.basis2) - diag({0, 1, 0})).norm() < 1e-14);

    const auto swap = decompose_involution(m2(0, 1, 1, 0));
    REQUIRE(swap.dim1() == 1);
    REQUIRE(swap.dim2() == 1);
    // spans of (1,1)/sqrt2 and (1,-1)/sqrt2
    CHECK((projector(swap.basis1) - m2(0.5, 0.5, 0.5, 0.5)).norm() < 1e-14);
    CHECK((projector(swap.basis2) - m2(0.5, -0.5, -0.5, 0.5)).norm() < 1e-14);

    const auto id = decompose_involution(identity(3));
    CHECK(id.dim1() == 3);
    CHECK(id.dim2() == 0);

    CHECK_THROWS_AS(decompose_involution(m2(1, 1, 0, 0)), NotInvolution);
}

TEST_CASE("decompose_involution block-diagonalizes random involutions") {
    testing::Rng rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const Index n = testing::uniform_int(rng, 1, 9);
        const Index n1 = testing::uniform_int(rng, 0, static_cast<int>(n));
        const Matrix w = testing::random_invertible(n, rng, 10.0);
        Matrix sign = identity(n);
        for (Index k = n1; k < n; ++k) sign(k, k) = -1.0;
        const Matrix u = w * sign * w.inverse();
        const auto d = decompose_involution(u);
        CHECK(d.dim1() == n1);
        CHECK(d.dim1() + d.dim2() == n);
        CHECK((d.to_block_basis(u) - sign).norm() < 1e-10);
        CHECK((d.from_block_basis(sign) - u).norm() < 1e-10);
    }
}

TEST_CASE("block_form examples") {
    const Matrix u = diag({1, -1});
    const auto d = decompose_involution(u);

    const auto zero = block_form(Matrix::Zero(2, 2), d);
    CHECK(zero.b.norm() == 0.0);
    CHECK(zero.c.norm() == 0.0);

    const Complex mu(0.7, 0.0);
    const auto bf = block_form(m2(0, mu, mu, 0), d);
    REQUIRE(bf.b.rows() == 1);
    REQUIRE(bf.c.rows() == 1);
    // Basis vectors are determined up to unimodular phase; the product is not.
    CHECK(std::abs(bf.b(0, 0) * bf.c(0, 0) - mu * mu) < 1e-14);
    CHECK(std::abs(std::abs(bf.b(0, 0)) - 0.7) < 1e-14);
    CHECK((assemble_operator(bf, d) - m2(0, mu, mu, 0)).norm() < 1e-14);

    CHECK_THROWS_AS(block_form(identity(2), d), AnticommutationViolated);
}

TEST_CASE("assembled block operator anticommutes with diag(I, -I)") {
    testing::Rng rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        const auto pair = testing::random_anticommuting_pair(testing::uniform_int(rng, 1, 4),
                                                             testing::uniform_int(rng, 1, 4), rng);
        const auto d = decompose_involution(pair.u);
        const auto bf = block_form(pair.t, d);
        const Matrix tb = assemble_block_operator(bf);
        Matrix sign = identity(tb.rows());
        sign.bottomRightCorner(bf.dim2(), bf.dim2()) *= -1.0;
        CHECK((tb * sign + sign * tb).norm() == 0.0);
        CHECK((assemble_operator(bf, d) - pair.t).norm() < 1e-10 * (1.0 + pair.t.norm()));
        // bc is similar to the original block product
        const Vector e1 = eigenvalues(bf.b * bf.c);
        const Vector e2 = eigenvalues(pair.b * pair.c);
        CHECK(std::abs(e1.sum() - e2.sum()) < 1e-9 * (1.0 + e2.norm()));
    }
}

TEST_CASE("sufficient_radius_check examples") {
    CHECK(sufficient_radius_check(BlockForm{scalar(0.3), scalar(0.3)}));
    CHECK_FALSE(sufficient_radius_check(BlockForm{scalar(1.0), scalar(1.0)}));
    CHECK(sufficient_radius_check(BlockForm{identity(2), testing::jordan_zero_block(2)}));
    CHECK_FALSE(sufficient_radius_check(BlockForm{scalar(0.5), scalar(0.5)}));
}

TEST_CASE("square_root_obstruction examples") {
    CHECK(square_root_obstruction(m2(0, 1, 0, 0)));
    CHECK_FALSE(square_root_obstruction(identity(3)));
    CHECK(square_root_obstruction(direct_sum(testing::jordan_zero_block(2), scalar(5.0))));
    // J_3(0) has kernel pattern (1, 2) as well
    CHECK(square_root_obstruction(testing::jordan_zero_block(3)));
    // zero matrix: (2, 2), and it has the square root 0
    CHECK_FALSE(square_root_obstruction(Matrix::Zero(2, 2)));
}

TEST_CASE("no 2x2 matrix on a rational grid squares to J_2(0)") {
    // Exhaustive search over B = K / 6, K integer with |K_ij| <= 12: (K)^2 = 36 J.
    int hits = 0;
    for (int a = -12; a <= 12; ++a) {
        for (int b = -12; b <= 12; ++b) {
            for (int c = -12; c <= 12; ++c) {
                for (int d = -12; d <= 12; ++d) {
                    const int e00 = a * a + b * c;
                    const int e01 = a * b + b * d;
                    const int e10 = c * a + d * c;
                    const int e11 = c * b + d * d;
                    if (e00 == 0 && e01 == 36 && e10 == 0 && e11 == 0) ++hits;
                }
            }
        }
    }
    CHECK(hits == 0);

    // Symbolic case split: B^2 = tr(B) B - det(B) I. If tr(B) = 0 then B^2 is
    // scalar, never J. Otherwise B = (J + det(B) I) / tr(B) is upper triangular
    // with equal diagonal entries x, so tr(B)^2 = 4x^2 and B^2 has diagonal x^2 = 0,
    // forcing tr(B) = 2x = 0. Checked numerically on the parametrization.
    for (double x : {0.5, -1.0, 2.0}) {
        for (double y : {-3.0, 0.25, 1.0}) {
            const Matrix bm = m2(x, y, 0, x);
            const Matrix sq = bm * bm;
            CHECK(std::abs(sq(0, 0)) > 0.0);
        }
    }
}

TEST_CASE("obstructed blocks resist random square-root search") {
    testing::Rng rng(53);
    const std::array<Matrix, 3> targets = {
        m2(0, 1, 0, 0),
        direct_sum(testing::jordan_zero_block(2), scalar(5.0)),
        testing::jordan_zero_block(3),
    };
    for (const Matrix& a : targets) {
        REQUIRE(square_root_obstruction(a));
        double best = 1e300;
        for (int sample = 0; sample < 100; ++sample) {
            const double scale = std::pow(10.0, testing::uniform_real(rng, -2.0, 1.0));
            const Matrix b = scale * testing::random_matrix(a.rows(), rng);
            best = std::min(best, (b * b - a).norm());
        }
        CHECK(best > 1e-3);
    }
}

TEST_CASE("commuting_sqrt examples") {
    const Matrix u = diag({1, -1});
    const auto zero = commuting_sqrt(Matrix::Zero(2, 2), u);
    CHECK((zero.s - 0.5 * identity(2)).norm() < 1e-15);

    // t^2 + I/4 = (3/4 + 1/4) I
    const auto one = commuting_sqrt(m2(0, kR3, kR3, 0), u);
    CHECK((one.s - identity(2)).norm() < 1e-14);

    // b = I2, c = J2(0) - I/4: bc + I/4 = J2(0)
    const Matrix c = testing::jordan_zero_block(2) - 0.25 * identity(2);
    testing::Rng rng(54);
    const auto pair = testing::conjugated_pair(identity(2), c, rng);
    CHECK_THROWS_AS(commuting_sqrt(pair.t, pair.u), SquareRootObstructed);

    // t^2 + I/4 = 0 with both blocks zero: kernel pattern (2, 2), undecided
    const Complex half_i(0.0, 0.5);
    CHECK_THROWS_AS(commuting_sqrt(m2(0, half_i, half_i, 0), u), SingularUndecided);
}

TEST_CASE("factorize examples") {
    const Matrix u = diag({1, -1});
    const auto trivial = factorize(Matrix::Zero(2, 2), u);
    REQUIRE(trivial.constructed());
    CHECK((*trivial.p - diag({1, 0})).norm() < 1e-15);
    CHECK((*trivial.q - diag({1, 0})).norm() < 1e-15);

    const Matrix t = m2(0, kR3, kR3, 0);
    const auto r = factorize(t, u);
    REQUIRE(r.constructed());
    CHECK((*r.s - identity(2)).norm() < 1e-14);
    CHECK((*r.q - m2(1.5, kR3, -kR3, -0.5)).norm() < 1e-14);
    const Matrix& q = *r.q;
    CHECK((q * q - q).norm() < 1e-14);
    CHECK((commutator(*r.p, q) - t).norm() < 1e-14);
    for (const auto& [name, value] : r.residuals) {
        CAPTURE(name);
        CHECK(value <= 1e-12);
    }
}

TEST_CASE("factorize reports the obstruction verdict") {
    testing::Rng rng(55);
    const Matrix c = testing::jordan_zero_block(2) - 0.25 * identity(2);
    const auto pair = testing::conjugated_pair(identity(2), c, rng);
    const auto r = factorize(pair.t, pair.u);
    CHECK(r.verdict == Verdict::ObstructedNoSquareRoot);
    CHECK_FALSE(r.q.has_value());

    const auto bad = factorize(identity(2), diag({1, -1}));
    CHECK(bad.verdict == Verdict::AnticommutationViolated);
    CHECK_THROWS_AS(factorize(identity(2), m2(1, 1, 0, 0)), NotInvolution);
    CHECK_THROWS_AS(factorize(identity(2), identity(3)), DimensionMismatch);
}

TEST_CASE("factorize recovers commutators of random idempotent pairs") {
    testing::Rng rng(56);
    int constructed = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Index n = testing::uniform_int(rng, 2, 12);
        const Matrix p0 = testing::random_float_idempotent(n, testing::uniform_int(rng, 1, static_cast<int>(n) - 1), rng, 10.0);
        const Matrix q0 = testing::random_float_idempotent(n, testing::uniform_int(rng, 1, static_cast<int>(n) - 1), rng, 10.0);
        const Matrix t = p0 * q0 - q0 * p0;
        const Matrix u = 2.0 * p0 - identity(n);
        const auto r = factorize(t, u);
        REQUIRE(r.constructed());
        ++constructed;
        const Matrix& p = *r.p;
        const Matrix& q = *r.q;
        const double qn = q.norm();
        CHECK((q * q - q).norm() <= 1e-8 * std::max(1.0, qn * qn));
        CHECK((p * p - p).norm() <= 1e-8 * std::max(1.0, p.squaredNorm()));
        CHECK((commutator(p, q) - t).norm() <= 1e-8 * std::max(1.0, t.squaredNorm()));
        CHECK((p - p0).norm() <= 1e-10 * std::max(1.0, p0.norm()));
    }
    CHECK(constructed == 60);
}

TEST_CASE("Constructed results satisfy the block identities") {
    testing::Rng rng(57);
    for (int trial = 0; trial < 40; ++trial) {
        const auto pair = testing::random_anticommuting_pair(testing::uniform_int(rng, 1, 5),
                                                             testing::uniform_int(rng, 1, 5), rng, 0.6);
        const auto d = decompose_involution(pair.u);
        const auto r = factorize(pair.t, d);
        if (!r.constructed()) {
            CHECK(r.verdict != Verdict::IntertwinerMismatch);
            continue;
        }
        const Matrix& s = *r.s;
        const double scale = 1.0 + pair.t.squaredNorm() + s.squaredNorm();
        const Matrix v = 2.0 * *r.q - identity(pair.t.rows());
        CHECK((v - 2.0 * (s - pair.t) * pair.u).norm() <= 1e-8 * scale);
        CHECK((v * v - identity(v.rows())).norm() <= 1e-8 * (1.0 + v.squaredNorm()));

        const auto bf = block_form(pair.t, d);
        const Matrix sb = d.to_block_basis(s);
        const Matrix s1 = sb.topLeftCorner(d.dim1(), d.dim1());
        const Matrix s2 = sb.bottomRightCorner(d.dim2(), d.dim2());
        const double kappa = condition2(d.change_of_basis);
        CHECK((s1 * bf.b - bf.b * s2).norm() <= 1e-8 * kappa * scale);
        CHECK((s2 * bf.c - bf.c * s1).norm() <= 1e-8 * kappa * scale);
    }
}

TEST_CASE("small block products always factorize") {
    testing::Rng rng(58);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
        const auto pair = testing::random_anticommuting_pair(testing::uniform_int(rng, 1, 5),
                                                             testing::uniform_int(rng, 1, 5), rng,
                                                             testing::uniform_real(rng, 0.05, 0.4));
        const auto d = decompose_involution(pair.u);
        const auto bf = block_form(pair.t, d);
        if (!sufficient_radius_check(bf)) continue;
        ++checked;
        CHECK(factorize(pair.t, d).constructed());
    }
    CHECK(checked >= 30);
}

TEST_CASE("nilpotent block products factorize") {
    // r(bc) = 0 even with large entries.
    testing::Rng rng(59);
    const Matrix b = 5.0 * identity(3);
    const Matrix c = 3.0 * testing::jordan_zero_block(3);
    const auto pair = testing::conjugated_pair(b, c, rng);
    const auto r = factorize(pair.t, pair.u);
    REQUIRE(r.constructed());
    CHECK((commutator(*r.p, *r.q) - pair.t).norm() <= 1e-8 * std::max(1.0, pair.t.squaredNorm()));
}
