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
#include <stdexcept>
#include <string>
#include <utility>

namespace idemcomm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NonFiniteEntry : public Error {
public:
    using Error::Error;
};

class EigenSolverFailure : public Error {
public:
    using Error::Error;
};

/// An eigenvalue sits on the branch-cut ray of the requested square root.
class EigenvalueOnCut : public Error {
public:
    EigenvalueOnCut(double branch_angle, const std::string& msg)
        : Error(msg), branch_angle_(branch_angle) {}
    double branch_angle() const noexcept { return branch_angle_; }

private:
    double branch_angle_;
};

/// Zero is an eigenvalue; no primary square root is attempted.
class SingularUnsupported : public Error {
public:
    using Error::Error;
};

/// Carries the name of the offending operand and the measured residual.
class ResidualError : public Error {
public:
    ResidualError(std::string which, double residual, const std::string& msg)
        : Error(msg), which_(std::move(which)), residual_(residual) {}
    const std::string& which() const noexcept { return which_; }
    double residual() const noexcept { return residual_; }

private:
    std::string which_;
    double residual_;
};

class NotIdempotent : public ResidualError {
public:
    NotIdempotent(std::string which, double residual)
        : ResidualError(which, residual,
                        which + " is not idempotent (residual " + std::to_string(residual) + ")") {}
};

class NotInvolution : public ResidualError {
public:
    NotInvolution(std::string which, double residual)
        : ResidualError(which, residual,
                        which + " is not an involution (residual " + std::to_string(residual) + ")") {}
};

class WitnessInvalid : public ResidualError {
public:
    WitnessInvalid(std::string identity, double residual)
        : ResidualError(identity, residual,
                        "witness identity " + identity + " fails (residual " +
                            std::to_string(residual) + ")") {}
};

class AnticommutationViolated : public ResidualError {
public:
    explicit AnticommutationViolated(double residual)
        : ResidualError("tu+ut", residual,
                        "t does not anticommute with u (residual " + std::to_string(residual) + ")") {}
};

/// The kernel pattern (1, 2) rules out every square root of a diagonal block.
class SquareRootObstructed : public Error {
public:
    using Error::Error;
};

/// t^2 + I/4 is singular but the kernel pattern does not settle existence.
class SingularUndecided : public Error {
public:
    using Error::Error;
};

class MuTooSmall : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace idemcomm
