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

#include "idemcomm/rational.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace idemcomm {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
    RationalMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw DimensionMismatch("from_rows: row " + std::to_string(i) + " has " +
                                    std::to_string(rows[i].size()) + " entries, expected " +
                                    std::to_string(rows.size()));
        }
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : a_) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

Matrix RationalMatrix::to_complex() const {
    Matrix m(static_cast<Index>(n_), static_cast<Index>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            m(static_cast<Index>(i), static_cast<Index>(j)) = Complex((*this)(i, j).get_d(), 0.0);
        }
    }
    return m;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && sgn(a(pivot, col)) == 0) ++pivot;
        if (pivot == n_) return std::nullopt;
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Rational scale = 1 / a(col, col);
        for (std::size_t j = 0; j < n_; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == col || sgn(a(i, col)) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n_; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

void RationalMatrix::require_same_dim(const RationalMatrix& rhs, const char* what) const {
    if (n_ != rhs.n_) {
        throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(n_) +
                                " vs " + std::to_string(rhs.n_) + ")");
    }
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
    require_same_dim(rhs, "rational +");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs) {
    require_same_dim(rhs, "rational -");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
    for (auto& x : a_) x *= c;
    return *this;
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs) {
    lhs.require_same_dim(rhs, "rational *");
    const std::size_t n = lhs.n_;
    RationalMatrix out(n);
    Rational tmp;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = lhs(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                tmp = aik * rhs(k, j);
                out(i, j) += tmp;
            }
        }
    }
    return out;
}

bool operator==(const RationalMatrix& lhs, const RationalMatrix& rhs) {
    return lhs.n_ == rhs.n_ && lhs.a_ == rhs.a_;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

double residual_norm(const RationalMatrix& m) {
    Rational acc = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) acc += m(i, j) * m(i, j);
    }
    return std::sqrt(acc.get_d());
}

Rational binomial_half(unsigned k) {
    Rational c = 1;
    const Rational half(1, 2);
    for (unsigned j = 1; j <= k; ++j) {
        c *= (half - Rational(j) + 1) / Rational(j);
    }
    return c;
}

std::vector<Rational> binomial_half_coefficients(unsigned count) {
    std::vector<Rational> out;
    out.reserve(count);
    Rational c = 1;
    const Rational half(1, 2);
    for (unsigned k = 0; k < count; ++k) {
        if (k > 0) c *= (half - Rational(k) + 1) / Rational(k);
        out.push_back(c);
    }
    return out;
}

}  // namespace idemcomm
