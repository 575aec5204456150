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

#include <filesystem>
#include <string>
#include <string_view>

#include "idemcomm/core_linalg.hpp"
#include "idemcomm/rational.hpp"

/// Plain-text matrix format.
///
///   n
///   a11 a12 ... a1n
///   ...
///   an1 an2 ... ann
///
/// Complex entries are written "re", "re+imi" or "re-imi" (also "imi" for a
/// pure imaginary value). Rational entries are "num/den", integers, or
/// finite decimals such as "0.25", all read exactly. Blank lines and lines
/// starting with '#' are skipped. Doubles are written with 17 significant
/// digits, which round-trips every finite double.
namespace idemcomm::io {

Complex parse_complex(std::string_view token);
Rational parse_rational(std::string_view token);

Matrix parse_matrix(std::string_view text);
RationalMatrix parse_rational_matrix(std::string_view text);

Matrix read_matrix_file(const std::filesystem::path& path);
RationalMatrix read_rational_matrix_file(const std::filesystem::path& path);

std::string format_double(double x);
std::string format_complex(Complex z);
std::string format_matrix(const Matrix& m);
std::string format_rational_matrix(const RationalMatrix& m);

}  // namespace idemcomm::io
