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

#include "idemcomm/ring_witness.hpp"
#include "support/generators.hpp"

using namespace idemcomm;

namespace {

using RM = RationalMatrix;

const RM kP = RM::from_rows({{1, 0}, {0, 0}});
const RM kQ = RM::from_rows({{1, 1}, {0, 0}});
const RM kU = RM::from_rows({{1, 0}, {0, -1}});
const RM kV = RM::from_rows({{1, 2}, {0, -1}});
const RM kT = RM::from_rows({{0, 1}, {0, 0}});
const RM kHalf = RM::identity(2) * Rational(1, 2);

}  // namespace

TEST_CASE("idempotents to involutions: worked 2x2 example") {
    const auto r = idempotents_to_involutions(kP, kQ);
    CHECK(r.u == kU);
    CHECK(r.v == kV);
    CHECK(r.t == kT);
    // [u, v] = [[0,4],[0,0]] = 4t
    CHECK(commutator(r.u, r.v) == RM::from_rows({{0, 4}, {0, 0}}));
}

TEST_CASE("idempotents to involutions: trivial pairs") {
    const RM i2 = RM::identity(2);
    const auto a = idempotents_to_involutions(i2, i2);
    CHECK(a.u == i2);
    CHECK(a.v == i2);
    CHECK(a.t.is_zero());

    const auto b = idempotents_to_involutions(i2, RM::zero(2));
    CHECK(b.u == i2);
    CHECK(b.v == -i2);
    CHECK(b.t.is_zero());
}

TEST_CASE("idempotents to involutions rejects non-idempotents") {
    try {
        idempotents_to_involutions(kP, RM::from_rows({{2, 0}, {0, 0}}));
        FAIL("expected NotIdempotent");
    } catch (const NotIdempotent& e) {
        CHECK(e.which() == "q");
        CHECK(e.residual() > 0.0);
    }
    CHECK_THROWS_AS(idempotents_to_involutions(kU, kP), NotIdempotent);
}

TEST_CASE("involutions to sqrt witness") {
    const auto w = involutions_to_sqrt_witness(kU, kV);
    CHECK(w.t == kT);
    CHECK(w.s == kHalf);

    const auto same = involutions_to_sqrt_witness(kV, kV);
    CHECK(same.t.is_zero());
    CHECK(same.s == kHalf);

    const auto id = involutions_to_sqrt_witness(RM::identity(2), kV);
    CHECK(id.t.is_zero());
    CHECK(id.s == kV * Rational(1, 2));

    CHECK_THROWS_AS(involutions_to_sqrt_witness(kU, kQ), NotInvolution);
}

TEST_CASE("witness to involution") {
    // 2 diag(1,-1) [[1/2,1],[0,1/2]] = [[1,2],[0,-1]]
    CHECK(witness_to_involution(SqrtWitness<RM>{kU, kHalf, kT}) == kV);
    CHECK(witness_to_involution(SqrtWitness<RM>{kU, kHalf, RM::zero(2)}) == kU);
    CHECK(witness_to_involution(SqrtWitness<RM>{RM::identity(2), kHalf, RM::zero(2)}) == RM::identity(2));

    try {
        witness_to_involution(SqrtWitness<RM>{RM::identity(2), RM::identity(2), RM::zero(2)});
        FAIL("expected WitnessInvalid");
    } catch (const WitnessInvalid& e) {
        CHECK(e.which() == "s^2=t^2+1/4");
    }
}

TEST_CASE("involutions to idempotents") {
    const auto r = involutions_to_idempotents(kU, kV);
    CHECK(r.p == kP);
    CHECK(r.q == kQ);
    CHECK(r.t == kT);

    const RM i2 = RM::identity(2);
    const auto a = involutions_to_idempotents(i2, i2);
    CHECK(a.p == i2);
    CHECK(a.q == i2);
    CHECK(a.t.is_zero());

    const auto b = involutions_to_idempotents(i2, -i2);
    CHECK(b.p == i2);
    CHECK(b.q.is_zero());
    CHECK(b.t.is_zero());
}

TEST_CASE("verify_witness reports the five identities") {
    const auto good = verify_witness(SqrtWitness<RM>{kU, kHalf, kT});
    REQUIRE(good.checks.size() == 5);
    CHECK(good.passed());
    for (const auto& c : good.checks) CHECK(c.residual == 0.0);
    CHECK(good.checks[0].name == "u^2=1");
    CHECK(good.checks[4].name == "s^2=t^2+1/4");

    CHECK(verify_witness(SqrtWitness<RM>{RM::identity(2), kHalf, RM::zero(2)}).passed());

    const auto bad = verify_witness(SqrtWitness<RM>{RM::identity(2), RM::identity(2), RM::zero(2)});
    CHECK_FALSE(bad.passed());
    REQUIRE(bad.first_failure() != nullptr);
    CHECK(bad.first_failure()->name == "s^2=t^2+1/4");
}

TEST_CASE("float mode reproduces the worked example") {
    const auto r = idempotents_to_involutions(kP.to_complex(), kQ.to_complex());
    CHECK((r.u - kU.to_complex()).norm() == 0.0);
    CHECK((r.v - kV.to_complex()).norm() == 0.0);
    CHECK((r.t - kT.to_complex()).norm() == 0.0);
    const auto w = involutions_to_sqrt_witness(r.u, r.v);
    CHECK((w.s - kHalf.to_complex()).norm() == 0.0);
    CHECK(verify_witness(w).passed());
    CHECK((witness_to_involution(w) - kV.to_complex()).norm() == 0.0);
}

TEST_CASE("exact round trip (i) -> (ii) -> (i)") {
    testing::Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 5));
        const auto p = testing::random_rational_idempotent(n, static_cast<std::size_t>(testing::uniform_int(rng, 0, static_cast<int>(n))), rng);
        const auto q = testing::random_rational_idempotent(n, static_cast<std::size_t>(testing::uniform_int(rng, 0, static_cast<int>(n))), rng);
        const auto inv = idempotents_to_involutions(p, q);
        // 4t = uv - vu exactly
        CHECK(commutator(inv.u, inv.v) == inv.t * Rational(4));
        const auto back = involutions_to_idempotents(inv.u, inv.v);
        CHECK(back.p == p);
        CHECK(back.q == q);
        CHECK(back.t == inv.t);
    }
}

TEST_CASE("exact chain (ii) -> (iii) -> (ii) pins the commutator") {
    testing::Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 5));
        const auto p = testing::random_rational_idempotent(n, static_cast<std::size_t>(testing::uniform_int(rng, 0, static_cast<int>(n))), rng);
        const auto q = testing::random_rational_idempotent(n, static_cast<std::size_t>(testing::uniform_int(rng, 0, static_cast<int>(n))), rng);
        const auto inv = idempotents_to_involutions(p, q);
        const auto w = involutions_to_sqrt_witness(inv.u, inv.v);
        // ut + tu = 0
        CHECK((inv.u * w.t + w.t * inv.u).is_zero());
        CHECK(verify_witness(w).passed());
        const RM v2 = witness_to_involution(w);
        CHECK(v2 * v2 == RM::identity(n));
        CHECK(commutator(inv.u, v2) == commutator(inv.u, inv.v));
        // both defining expressions agree
        CHECK(v2 == (w.s - w.t) * inv.u * Rational(2));
    }
}

TEST_CASE("float chain on random idempotents") {
    testing::Rng rng(43);
    const ToleranceConfig cfg;
    for (int trial = 0; trial < 40; ++trial) {
        const Index n = testing::uniform_int(rng, 1, 10);
        const Matrix p = testing::random_float_idempotent(n, testing::uniform_int(rng, 0, static_cast<int>(n)), rng, 10.0);
        const Matrix q = testing::random_float_idempotent(n, testing::uniform_int(rng, 0, static_cast<int>(n)), rng, 10.0);
        const auto inv = idempotents_to_involutions(p, q, cfg);
        CHECK((commutator(inv.u, inv.v) - 4.0 * inv.t).norm() <= 1e-10 * (1.0 + inv.u.norm() * inv.v.norm()));
        const auto w = involutions_to_sqrt_witness(inv.u, inv.v, cfg);
        CHECK(verify_witness(w, cfg).passed());
        const Matrix v2 = witness_to_involution(w, cfg);
        CHECK(check_involution(v2, "v", cfg).holds);
        const auto back = involutions_to_idempotents(inv.u, v2, cfg);
        CHECK(check_idempotent(back.q, "q", cfg).holds);
        CHECK((back.t - inv.t).norm() <= 1e-8 * (1.0 + inv.t.norm()));
    }
}
