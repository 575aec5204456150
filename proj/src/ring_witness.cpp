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

#include "idemcomm/ring_witness.hpp"

#include <algorithm>
#include <limits>

namespace idemcomm {

namespace {

template <class M>
struct Ops;

template <>
struct Ops<Matrix> {
    static Matrix one(const Matrix& like) { return identity(like.rows()); }
    static Matrix scaled(const Matrix& m, long num, long den) {
        return m * Complex(static_cast<double>(num) / static_cast<double>(den), 0.0);
    }
    static double norm(const Matrix& m) { return m.norm(); }
    static void same_shape(const Matrix& a, const Matrix& b, const char* what) {
        require_square(a, what);
        require_same_dim(a, b, what);
    }
    static IdentityCheck check(std::string name, const Matrix& diff, double scale,
                               const ToleranceConfig& cfg) {
        const double r = diff.norm();
        return {std::move(name), r, r <= cfg.eq_tol * std::max(1.0, scale)};
    }
};

template <>
struct Ops<RationalMatrix> {
    static RationalMatrix one(const RationalMatrix& like) { return RationalMatrix::identity(like.dim()); }
    static RationalMatrix scaled(const RationalMatrix& m, long num, long den) {
        return m * Rational(num, den);
    }
    static double norm(const RationalMatrix& m) { return residual_norm(m); }
    static void same_shape(const RationalMatrix& a, const RationalMatrix& b, const char* what) {
        if (a.dim() != b.dim()) {
            throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
        }
    }
    static IdentityCheck check(std::string name, const RationalMatrix& diff, double /*scale*/,
                               const ToleranceConfig& /*cfg*/) {
        if (diff.is_zero()) return {std::move(name), 0.0, true};
        // Keep a nonzero report even if the double rounding underflows.
        const double r = std::max(residual_norm(diff), std::numeric_limits<double>::denorm_min());
        return {std::move(name), r, false};
    }
};

template <class M>
double sq(const M& m) {
    const double x = Ops<M>::norm(m);
    return x * x;
}

}  // namespace

bool WitnessReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

const IdentityCheck* WitnessReport::first_failure() const {
    for (const auto& c : checks) {
        if (!c.holds) return &c;
    }
    return nullptr;
}

template <class M>
IdentityCheck check_idempotent(const M& a, const std::string& name, const ToleranceConfig& cfg) {
    return Ops<M>::check(name + "^2=" + name, a * a - a, sq(a), cfg);
}

template <class M>
IdentityCheck check_involution(const M& a, const std::string& name, const ToleranceConfig& cfg) {
    return Ops<M>::check(name + "^2=1", a * a - Ops<M>::one(a), sq(a), cfg);
}

template <class M>
InvolutionPair<M> idempotents_to_involutions(const M& p, const M& q, const ToleranceConfig& cfg) {
    Ops<M>::same_shape(p, q, "idempotents_to_involutions");
    if (const auto c = check_idempotent(p, "p", cfg); !c.holds) throw NotIdempotent("p", c.residual);
    if (const auto c = check_idempotent(q, "q", cfg); !c.holds) throw NotIdempotent("q", c.residual);
    const M one = Ops<M>::one(p);
    M u = Ops<M>::scaled(p, 2, 1) - one;
    M v = Ops<M>::scaled(q, 2, 1) - one;
    M t = p * q - q * p;
    return {std::move(u), std::move(v), std::move(t)};
}

template <class M>
SqrtWitness<M> involutions_to_sqrt_witness(const M& u, const M& v, const ToleranceConfig& cfg) {
    Ops<M>::same_shape(u, v, "involutions_to_sqrt_witness");
    if (const auto c = check_involution(u, "u", cfg); !c.holds) throw NotInvolution("u", c.residual);
    if (const auto c = check_involution(v, "v", cfg); !c.holds) throw NotInvolution("v", c.residual);
    const M uv = u * v;
    const M vu = v * u;
    M t = Ops<M>::scaled(uv - vu, 1, 4);
    M s = Ops<M>::scaled(uv + vu, 1, 4);
    return {u, std::move(s), std::move(t)};
}

template <class M>
WitnessReport verify_witness(const SqrtWitness<M>& w, const ToleranceConfig& cfg) {
    Ops<M>::same_shape(w.u, w.s, "verify_witness");
    Ops<M>::same_shape(w.u, w.t, "verify_witness");
    const M one = Ops<M>::one(w.u);
    const double nu = Ops<M>::norm(w.u);
    const double ns = Ops<M>::norm(w.s);
    const double nt = Ops<M>::norm(w.t);
    WitnessReport report;
    report.checks.push_back(Ops<M>::check("u^2=1", w.u * w.u - one, nu * nu, cfg));
    report.checks.push_back(Ops<M>::check("ut+tu=0", w.u * w.t + w.t * w.u, nu * nt, cfg));
    report.checks.push_back(Ops<M>::check("us=su", w.u * w.s - w.s * w.u, nu * ns, cfg));
    report.checks.push_back(Ops<M>::check("st=ts", w.s * w.t - w.t * w.s, ns * nt, cfg));
    report.checks.push_back(Ops<M>::check("s^2=t^2+1/4", w.s * w.s - w.t * w.t - Ops<M>::scaled(one, 1, 4),
                                          std::max(ns * ns, nt * nt), cfg));
    return report;
}

template <class M>
M witness_to_involution(const SqrtWitness<M>& w, const ToleranceConfig& cfg) {
    const auto report = verify_witness(w, cfg);
    if (const auto* bad = report.first_failure()) throw WitnessInvalid(bad->name, bad->residual);
    return Ops<M>::scaled(w.u * (w.s + w.t), 2, 1);
}

template <class M>
IdempotentPair<M> involutions_to_idempotents(const M& u, const M& v, const ToleranceConfig& cfg) {
    Ops<M>::same_shape(u, v, "involutions_to_idempotents");
    if (const auto c = check_involution(u, "u", cfg); !c.holds) throw NotInvolution("u", c.residual);
    if (const auto c = check_involution(v, "v", cfg); !c.holds) throw NotInvolution("v", c.residual);
    const M one = Ops<M>::one(u);
    M p = Ops<M>::scaled(u + one, 1, 2);
    M q = Ops<M>::scaled(v + one, 1, 2);
    M t = p * q - q * p;
    return {std::move(p), std::move(q), std::move(t)};
}

#define IDEMCOMM_INSTANTIATE(M)                                                                          \
    template IdentityCheck check_idempotent<M>(const M&, const std::string&, const ToleranceConfig&);   \
    template IdentityCheck check_involution<M>(const M&, const std::string&, const ToleranceConfig&);   \
    template InvolutionPair<M> idempotents_to_involutions<M>(const M&, const M&, const ToleranceConfig&); \
    template SqrtWitness<M> involutions_to_sqrt_witness<M>(const M&, const M&, const ToleranceConfig&);  \
    template WitnessReport verify_witness<M>(const SqrtWitness<M>&, const ToleranceConfig&);            \
    template M witness_to_involution<M>(const SqrtWitness<M>&, const ToleranceConfig&);                  \
    template IdempotentPair<M> involutions_to_idempotents<M>(const M&, const M&, const ToleranceConfig&);

IDEMCOMM_INSTANTIATE(Matrix)
IDEMCOMM_INSTANTIATE(RationalMatrix)

#undef IDEMCOMM_INSTANTIATE

}  // namespace idemcomm
