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

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "idemcomm/core_linalg.hpp"

namespace idemcomm {

using Rational = mpq_class;

/// Dense square matrix over Q with exact GMP arithmetic.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static RationalMatrix zero(std::size_t n) { return RationalMatrix(n); }
    static RationalMatrix identity(std::size_t n);
    static RationalMatrix diagonal(const std::vector<Rational>& d);
    /// Row-major integer entries; rows.size() is the dimension.
    static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t dim() const noexcept { return n_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_zero() const;
    /// Complex double image (rounded to nearest).
    Matrix to_complex() const;

    /// Gauss-Jordan inverse; nullopt when singular.
    std::optional<RationalMatrix> inverse() const;

    RationalMatrix& operator+=(const RationalMatrix& rhs);
    RationalMatrix& operator-=(const RationalMatrix& rhs);
    RationalMatrix& operator*=(const Rational& c);

    friend RationalMatrix operator+(RationalMatrix lhs, const RationalMatrix& rhs) { return lhs += rhs; }
    friend RationalMatrix operator-(RationalMatrix lhs, const RationalMatrix& rhs) { return lhs -= rhs; }
    friend RationalMatrix operator*(RationalMatrix lhs, const Rational& c) { return lhs *= c; }
    friend RationalMatrix operator*(const Rational& c, RationalMatrix rhs) { return rhs *= c; }
    friend RationalMatrix operator-(RationalMatrix m) { return m *= Rational(-1); }
    friend RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
    friend bool operator==(const RationalMatrix& lhs, const RationalMatrix& rhs);

private:
    void require_same_dim(const RationalMatrix& rhs, const char* what) const;

    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

/// Frobenius norm rounded to double. Zero exactly when the matrix is zero.
double residual_norm(const RationalMatrix& m);

/// binom(1/2, k) through binom(1/2, k) = binom(1/2, k-1) * (1/2 - k + 1) / k.
Rational binomial_half(unsigned k);
std::vector<Rational> binomial_half_coefficients(unsigned count);

}  // namespace idemcomm
