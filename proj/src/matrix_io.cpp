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

#include "idemcomm/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>

namespace idemcomm::io {

namespace {

/// Entry-level failure; the caller attaches line and column.
struct EntryError {
    std::string message;
};

struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// Splits non-comment lines into whitespace-separated tokens.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        const std::string_view line = text.substr(start, end - start);
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && is_blank(line[i])) ++i;
            if (i >= line.size()) break;
            if (tokens.empty() && line[i] == '#') break;
            const std::size_t tok_start = i;
            while (i < line.size() && !is_blank(line[i])) ++i;
            tokens.push_back({line.substr(tok_start, i - tok_start), line_no, tok_start + 1});
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

/// Parses a real number at the front of s, accepting a leading '+'.
std::optional<double> take_double(std::string_view& s) {
    std::string_view rest = s;
    bool negate = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negate = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty() || rest.front() == '+' || rest.front() == '-') return std::nullopt;
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), x);
    if (ec != std::errc() || ptr == rest.data()) return std::nullopt;
    s = rest.substr(static_cast<std::size_t>(ptr - rest.data()));
    return negate ? -x : x;
}

Complex complex_entry(std::string_view token) {
    std::string_view rest = token;
    const auto first = take_double(rest);
    if (!first) throw EntryError{"expected a number, got '" + std::string(token) + "'"};
    Complex z;
    if (rest.empty()) {
        z = Complex(*first, 0.0);
    } else if (rest == "i") {
        z = Complex(0.0, *first);
    } else {
        if (rest.front() != '+' && rest.front() != '-') {
            throw EntryError{"malformed complex entry '" + std::string(token) + "'"};
        }
        const auto second = take_double(rest);
        if (!second || rest != "i") {
            throw EntryError{"malformed complex entry '" + std::string(token) +
                             "' (expected re+imi or re-imi)"};
        }
        z = Complex(*first, *second);
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw EntryError{"non-finite entry '" + std::string(token) + "'"};
    }
    return z;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

Rational rational_entry(std::string_view token) {
    std::string_view body = token;
    bool negate = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negate = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational q;
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const auto num = body.substr(0, slash);
        const auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw EntryError{"malformed rational '" + std::string(token) + "'"};
        }
        const mpz_class d(std::string(den), 10);
        if (d == 0) throw EntryError{"zero denominator in '" + std::string(token) + "'"};
        q = Rational(mpz_class(std::string(num), 10), d);
    } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const auto whole = body.substr(0, dot);
        const auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty())) {
            throw EntryError{"malformed decimal '" + std::string(token) + "'"};
        }
        mpz_class den = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
        const std::string digits = std::string(whole) + std::string(frac);
        q = Rational(mpz_class(digits.empty() ? "0" : digits, 10), den);
    } else {
        if (!all_digits(body)) throw EntryError{"malformed rational '" + std::string(token) + "'"};
        q = Rational(mpz_class(std::string(body), 10));
    }
    q.canonicalize();
    return negate ? Rational(-q) : q;
}

template <class Entry, class Store>
void parse_body(std::string_view text, Entry&& entry, Store&& store, std::size_t& n_out,
                const std::function<void(std::size_t)>& allocate) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input: expected dimension line");
    const auto& header = lines.front();
    if (header.size() != 1) {
        throw ParseError(header[1].line, header[1].column, "dimension line must hold a single integer");
    }
    std::size_t n = 0;
    {
        const auto s = header[0].text;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
        if (ec != std::errc() || ptr != s.data() + s.size() || n == 0) {
            throw ParseError(header[0].line, header[0].column,
                             "expected a positive dimension, got '" + std::string(s) + "'");
        }
    }
    if (lines.size() - 1 < n) {
        const auto& last = lines.back().back();
        throw ParseError(last.line + 1, 1,
                         "expected " + std::to_string(n) + " rows, found " +
                             std::to_string(lines.size() - 1));
    }
    if (lines.size() - 1 > n) {
        const auto& extra = lines[n + 1].front();
        throw ParseError(extra.line, extra.column, "unexpected extra row");
    }
    allocate(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = lines[i + 1];
        if (row.size() != n) {
            const auto& where = row.size() > n ? row[n] : row.back();
            throw ParseError(where.line, where.column,
                             "expected " + std::to_string(n) + " entries, found " +
                                 std::to_string(row.size()));
        }
        for (std::size_t j = 0; j < n; ++j) {
            try {
                store(i, j, entry(row[j].text));
            } catch (const EntryError& e) {
                throw ParseError(row[j].line, row[j].column, e.message);
            }
        }
    }
    n_out = n;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Complex parse_complex(std::string_view token) {
    try {
        return complex_entry(token);
    } catch (const EntryError& e) {
        throw ParseError(1, 1, e.message);
    }
}

Rational parse_rational(std::string_view token) {
    try {
        return rational_entry(token);
    } catch (const EntryError& e) {
        throw ParseError(1, 1, e.message);
    }
}

Matrix parse_matrix(std::string_view text) {
    Matrix m;
    std::size_t n = 0;
    parse_body(
        text, complex_entry,
        [&](std::size_t i, std::size_t j, Complex z) {
            m(static_cast<Index>(i), static_cast<Index>(j)) = z;
        },
        n, [&](std::size_t dim) { m.resize(static_cast<Index>(dim), static_cast<Index>(dim)); });
    return m;
}

RationalMatrix parse_rational_matrix(std::string_view text) {
    RationalMatrix m;
    std::size_t n = 0;
    parse_body(
        text, rational_entry, [&](std::size_t i, std::size_t j, Rational q) { m(i, j) = std::move(q); },
        n, [&](std::size_t dim) { m = RationalMatrix(dim); });
    return m;
}

Matrix read_matrix_file(const std::filesystem::path& path) {
    try {
        return parse_matrix(slurp(path));
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), path.string() + ": " + e.what());
    }
}

RationalMatrix read_rational_matrix_file(const std::filesystem::path& path) {
    try {
        return parse_rational_matrix(slurp(path));
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), path.string() + ": " + e.what());
    }
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return format_double(z.real());
    std::string out = format_double(z.real());
    out += std::signbit(z.imag()) ? '-' : '+';
    out += format_double(std::abs(z.imag()));
    out += 'i';
    return out;
}

std::string format_matrix(const Matrix& m) {
    require_square(m, "format_matrix argument");
    std::string out = std::to_string(m.rows()) + "\n";
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ' ';
            out += format_complex(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string format_rational_matrix(const RationalMatrix& m) {
    std::string out = std::to_string(m.dim()) + "\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j > 0) out += ' ';
            out += m(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

}  // namespace idemcomm::io
