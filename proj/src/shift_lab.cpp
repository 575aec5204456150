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

#include "idemcomm/shift_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include "idemcomm/matrix_io.hpp"
#include "idemcomm/rational.hpp"

namespace idemcomm::shift_lab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool mu_less(Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

struct Cell {
    Index n;
    Complex mu;
};

std::vector<Cell> make_cells(const std::vector<Index>& dims, const std::vector<Complex>& mus) {
    if (dims.empty()) throw Error("mu_sweep: empty dimension list");
    if (mus.empty()) throw Error("mu_sweep: empty mu list");
    std::set<Index> ns(dims.begin(), dims.end());
    if (*ns.begin() < 2) throw Error("mu_sweep: every dimension must be at least 2");
    std::vector<Complex> ms = mus;
    std::sort(ms.begin(), ms.end(), mu_less);
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

    std::vector<Cell> cells;
    cells.reserve(ns.size() * ms.size());
    for (Index n : ns) {
        for (Complex mu : ms) cells.push_back({n, mu});
    }
    return cells;
}

SweepRecord failed_record(Index n, Complex mu, Verdict verdict, std::string error) {
    SweepRecord rec;
    rec.n = n;
    rec.mu = mu;
    rec.q_norm = kNaN;
    rec.residual_commutator = kNaN;
    rec.residual_idempotent = kNaN;
    rec.s_condition = kNaN;
    rec.verdict = verdict;
    rec.error = std::move(error);
    return rec;
}

SweepRecord guarded_cell(const Cell& c, ShiftDirection direction, const ToleranceConfig& cfg) {
    try {
        return sweep_cell(c.n, c.mu, direction, cfg);
    } catch (const std::exception& e) {
        return failed_record(c.n, c.mu, Verdict::SingularUndecided, e.what());
    }
}

}  // namespace

std::string_view to_string(ShiftDirection d) {
    return d == ShiftDirection::Forward ? "forward" : "backward";
}

TruncatedShift TruncatedShift::make(Index n, ShiftDirection direction) {
    if (n < 1) throw Error("truncated shift needs n >= 1");
    TruncatedShift s;
    s.n = n;
    s.direction = direction;
    s.matrix = Matrix::Zero(n, n);
    for (Index k = 0; k + 1 < n; ++k) {
        if (direction == ShiftDirection::Forward) {
            s.matrix(k + 1, k) = 1.0;
        } else {
            s.matrix(k, k + 1) = 1.0;
        }
    }
    return s;
}

InvolutionDecomposition interleave_decomposition(Index n) {
    if (n < 1) throw Error("interleave_decomposition needs n >= 1");
    const Index n1 = n / 2;      // e2, e4, ...
    const Index n2 = n - n1;     // e1, e3, ...
    InvolutionDecomposition d;
    d.u = Matrix::Zero(n, n);
    d.basis1 = Matrix::Zero(n, n1);
    d.basis2 = Matrix::Zero(n, n2);
    for (Index k = 1; k <= n; ++k) {
        const Index idx = k - 1;
        if (k % 2 == 0) {
            d.u(idx, idx) = 1.0;
            d.basis1(idx, k / 2 - 1) = 1.0;
        } else {
            d.u(idx, idx) = -1.0;
            d.basis2(idx, (k - 1) / 2) = 1.0;
        }
    }
    d.change_of_basis.resize(n, n);
    d.change_of_basis << d.basis1, d.basis2;
    return d;
}

ShiftBlockOperator shift_block_operator(Index n, Complex mu, ShiftDirection direction) {
    if (n < 2) throw Error("shift_block_operator needs n >= 2");
    const auto shift = TruncatedShift::make(n, direction);
    return {mu * shift.matrix, interleave_decomposition(n).u};
}

Matrix binomial_sqrt_series(const TruncatedShift& shift) {
    const Index n = shift.n;
    const auto coeffs = binomial_half_coefficients(static_cast<unsigned>(n));
    Matrix r = Matrix::Zero(n, n);
    // shift^k has ones on the k-th sub- (forward) or super- (backward) diagonal.
    for (Index k = 0; k < n; ++k) {
        const double c = coeffs[static_cast<std::size_t>(k)].get_d();
        for (Index i = 0; i + k < n; ++i) {
            if (shift.direction == ShiftDirection::Forward) {
                r(i + k, i) = c;
            } else {
                r(i, i + k) = c;
            }
        }
    }
    return r;
}

SweepRecord sweep_cell(Index n, Complex mu, ShiftDirection direction, const ToleranceConfig& cfg) {
    const auto op = shift_block_operator(n, mu, direction);
    const auto result = factorize(op.t, interleave_decomposition(n), cfg);
    if (!result.constructed()) return failed_record(n, mu, result.verdict, result.note);

    SweepRecord rec;
    rec.n = n;
    rec.mu = mu;
    rec.q_norm = norm2(*result.q);
    rec.residual_commutator = result.residuals.at("commutator");
    rec.residual_idempotent = result.residuals.at("q_idempotent");
    rec.s_condition = condition2(*result.s);
    rec.verdict = result.verdict;
    return rec;
}

std::vector<SweepRecord> mu_sweep(const std::vector<Index>& dims, const std::vector<Complex>& mus,
                                  ShiftDirection direction, const ToleranceConfig& cfg) {
    const auto cells = make_cells(dims, mus);
    std::vector<SweepRecord> out(cells.size());
    const auto count = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = guarded_cell(cells[static_cast<std::size_t>(i)], direction, cfg);
    }
    return out;
}

std::vector<SweepRecord> mu_sweep_serial(const std::vector<Index>& dims, const std::vector<Complex>& mus,
                                         ShiftDirection direction, const ToleranceConfig& cfg) {
    const auto cells = make_cells(dims, mus);
    std::vector<SweepRecord> out;
    out.reserve(cells.size());
    for (const auto& c : cells) out.push_back(guarded_cell(c, direction, cfg));
    return out;
}

std::vector<GrowthSummary> growth_ratios(const std::vector<SweepRecord>& records) {
    std::vector<Complex> mus;
    for (const auto& r : records) {
        if (std::find(mus.begin(), mus.end(), r.mu) == mus.end()) mus.push_back(r.mu);
    }
    std::sort(mus.begin(), mus.end(), mu_less);

    std::vector<GrowthSummary> out;
    for (Complex mu : mus) {
        std::vector<const SweepRecord*> rows;
        for (const auto& r : records) {
            if (r.mu == mu && r.verdict == Verdict::Constructed) rows.push_back(&r);
        }
        std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->n < b->n; });
        GrowthSummary g;
        g.mu = mu;
        for (const auto* r : rows) g.dims.push_back(r->n);
        for (std::size_t k = 1; k < rows.size(); ++k) {
            g.ratios.push_back(rows[k]->q_norm / rows[k - 1]->q_norm);
        }
        if (!g.ratios.empty()) {
            g.max_ratio = *std::max_element(g.ratios.begin(), g.ratios.end());
            g.last_ratio = g.ratios.back();
        }
        out.push_back(std::move(g));
    }
    return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.n << ',' << io::format_double(r.mu.real()) << ',' << io::format_double(r.mu.imag())
            << ',' << io::format_double(r.q_norm) << ',' << io::format_double(r.residual_commutator)
            << ',' << io::format_double(r.residual_idempotent) << ','
            << io::format_double(r.s_condition) << '\n';
    }
}

std::string sweep_report_header(ShiftDirection direction) {
    std::ostringstream ss;
    ss << "# shift-sweep: " << to_string(direction) << " shift, t = mu * S_n, u = interleave involution\n"
       << "# Truncated shifts are nilpotent, so every finite cell factorizes.\n"
       << "# Existence in the infinite-dimensional limit is reflected only by growth of q_norm\n"
       << "# (largest singular value of q) as n doubles: bounded for |mu| <= 1/2, unbounded beyond.\n"
       << "# Ratios below are q_norm(n_next) / q_norm(n); they are diagnostics, not proofs.\n";
    return ss.str();
}

std::string gnuplot_script(const std::string& csv_path, const std::vector<SweepRecord>& records) {
    std::ostringstream ss;
    ss << "set datafile separator ','\n"
       << "set key top left\n"
       << "set logscale y\n"
       << "set xlabel 'n'\n"
       << "set ylabel 'q_norm'\n"
       << "plot ";
    const auto groups = growth_ratios(records);
    for (std::size_t k = 0; k < groups.size(); ++k) {
        const Complex mu = groups[k].mu;
        if (k > 0) ss << ", \\\n     ";
        ss << "'" << csv_path << "' every ::1 using 1:($2==" << io::format_double(mu.real())
           << " && $3==" << io::format_double(mu.imag()) << " ? $4 : 1/0) with linespoints title 'mu="
           << io::format_complex(mu) << "'";
    }
    ss << '\n';
    return ss.str();
}

Case3Diagnostics case3_diagnostics(Index n, Complex mu, const ToleranceConfig& cfg) {
    if (std::abs(mu) <= 0.5) {
        throw MuTooSmall("case 3 diagnostics need |mu| > 1/2, got |mu| = " + io::format_double(std::abs(mu)));
    }
    if (n < 1) throw Error("case3_diagnostics needs n >= 1");
    Case3Diagnostics out;
    out.mu = mu;
    out.n = n;
    out.lambda = -1.0 / (4.0 * mu * mu);

    const Matrix a = TruncatedShift::make(n, ShiftDirection::Backward).matrix - out.lambda * identity(n);
    out.kernel = kernel_dims(a, cfg);

    Vector x1(n);
    Vector x2(n);
    Complex power = 1.0;  // lambda^k
    for (Index k = 0; k < n; ++k) {
        x1(k) = power;
        x2(k) = k == 0 ? Complex(0.0) : static_cast<double>(k) * x1(k - 1);
        power *= out.lambda;
    }
    out.kernel_vector_norm = x1.norm();
    out.generalized_norm = x2.norm();
    out.kernel_residual = (a * x1).norm();
    out.generalized_residual = (a * (a * x2)).norm();
    return out;
}

}  // namespace idemcomm::shift_lab
