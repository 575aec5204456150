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

#include <string>
#include <vector>

#include "idemcomm/core_linalg.hpp"
#include "idemcomm/rational.hpp"

/// Conversions between the three equivalent certificates that t is a
/// commutator of idempotents in a ring where 2 is invertible:
///
///   (i)   t = pq - qp with p^2 = p, q^2 = q
///   (ii)  4t = uv - vu with u^2 = v^2 = 1
///   (iii) u^2 = 1, ut + tu = 0, us = su, st = ts, s^2 = t^2 + 1/4
///
/// Every function is instantiated for Matrix (complex double, checks use
/// ToleranceConfig::eq_tol) and RationalMatrix (exact, checks demand a zero
/// residual).
namespace idemcomm {

template <class M>
struct IdempotentPair {
    M p;
    M q;
    M t;  ///< pq - qp
};

template <class M>
struct InvolutionPair {
    M u;
    M v;
    M t;  ///< (uv - vu) / 4
};

/// Certificate (iii).
template <class M>
struct SqrtWitness {
    M u;
    M s;
    M t;
};

struct IdentityCheck {
    std::string name;
    double residual = 0.0;
    bool holds = false;
};

struct WitnessReport {
    std::vector<IdentityCheck> checks;
    bool passed() const;
    const IdentityCheck* first_failure() const;
};

/// u = 2p - 1, v = 2q - 1, t = pq - qp. Throws NotIdempotent("p"|"q", residual).
template <class M>
InvolutionPair<M> idempotents_to_involutions(const M& p, const M& q, const ToleranceConfig& cfg = {});

/// t = (uv - vu)/4, s = (uv + vu)/4. Throws NotInvolution("u"|"v", residual).
template <class M>
SqrtWitness<M> involutions_to_sqrt_witness(const M& u, const M& v, const ToleranceConfig& cfg = {});

/// v = 2u(s + t). Checks the witness first and throws WitnessInvalid on the
/// first identity that fails.
template <class M>
M witness_to_involution(const SqrtWitness<M>& w, const ToleranceConfig& cfg = {});

/// p = (u + 1)/2, q = (v + 1)/2, t = pq - qp. Throws NotInvolution.
template <class M>
IdempotentPair<M> involutions_to_idempotents(const M& u, const M& v, const ToleranceConfig& cfg = {});

/// Residuals of the five identities of (iii), in the order
/// u^2=1, ut+tu=0, us=su, st=ts, s^2=t^2+1/4.
template <class M>
WitnessReport verify_witness(const SqrtWitness<M>& w, const ToleranceConfig& cfg = {});

/// Idempotence / involution checks with the mode's pass rule.
template <class M>
IdentityCheck check_idempotent(const M& a, const std::string& name, const ToleranceConfig& cfg = {});
template <class M>
IdentityCheck check_involution(const M& a, const std::string& name, const ToleranceConfig& cfg = {});

}  // namespace idemcomm
