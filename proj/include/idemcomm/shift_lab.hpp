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

#include <iosfwd>
#include <string>
#include <vector>

#include "idemcomm/core_linalg.hpp"
#include "idemcomm/factorizer.hpp"

/// Experiments on n x n truncations of the unilateral shifts.
///
/// Basis vectors are numbered from 1 in every report: X1 is spanned by the
/// even-numbered vectors e2, e4, ... and X2 by the odd-numbered ones. With
/// 0-based storage, e_k lives at index k - 1.
namespace idemcomm::shift_lab {

enum class ShiftDirection { Forward, Backward };

std::string_view to_string(ShiftDirection d);

struct TruncatedShift {
    Index n = 0;
    ShiftDirection direction = ShiftDirection::Forward;
    /// Forward: e_k -> e_{k+1} (ones on the subdiagonal).
    /// Backward: e_k -> e_{k-1} (ones on the superdiagonal).
    Matrix matrix;

    static TruncatedShift make(Index n, ShiftDirection direction);
};

/// u = -1 on odd-numbered, +1 on even-numbered basis vectors.
/// basis1 = (e2, e4, ...), basis2 = (e1, e3, ...).
InvolutionDecomposition interleave_decomposition(Index n);

struct ShiftBlockOperator {
    Matrix t;  ///< mu * shift
    Matrix u;  ///< interleave involution
};

/// Throws Error for n < 2.
ShiftBlockOperator shift_block_operator(Index n, Complex mu, ShiftDirection direction);

/// R = sum_{k=0}^{n-1} binom(1/2, k) shift^k; R^2 = I + shift since shift^n = 0.
Matrix binomial_sqrt_series(const TruncatedShift& shift);

struct SweepRecord {
    Index n = 0;
    Complex mu;
    double q_norm = 0.0;               ///< largest singular value of q
    double residual_commutator = 0.0;  ///< ||pq - qp - mu * shift||_F
    double residual_idempotent = 0.0;  ///< ||q^2 - q||_F
    double s_condition = 0.0;          ///< sigma_max(s) / sigma_min(s)
    Verdict verdict = Verdict::Constructed;
    std::string error;  ///< set when the cell did not construct q
};

SweepRecord sweep_cell(Index n, Complex mu, ShiftDirection direction, const ToleranceConfig& cfg = {});

/// Every (n, mu) cell, sorted by (n, re mu, im mu). Cells are evaluated in
/// parallel with OpenMP; failures are stored per record.
/// Throws Error when dims or mus is empty or some n < 2.
std::vector<SweepRecord> mu_sweep(const std::vector<Index>& dims, const std::vector<Complex>& mus,
                                  ShiftDirection direction, const ToleranceConfig& cfg = {});

/// Single-threaded reference for mu_sweep; identical output.
std::vector<SweepRecord> mu_sweep_serial(const std::vector<Index>& dims, const std::vector<Complex>& mus,
                                         ShiftDirection direction, const ToleranceConfig& cfg = {});

struct GrowthSummary {
    Complex mu;
    std::vector<Index> dims;
    std::vector<double> ratios;  ///< q_norm(dims[k+1]) / q_norm(dims[k])
    double max_ratio = 0.0;
    double last_ratio = 0.0;
};

/// Successive q_norm ratios per mu, over the dimensions present in records.
std::vector<GrowthSummary> growth_ratios(const std::vector<SweepRecord>& records);

inline constexpr const char* kSweepCsvHeader = "n,mu_re,mu_im,q_norm,res_comm,res_idem,s_cond";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

/// Commented preamble for sweep output explaining what finite truncations can show.
std::string sweep_report_header(ShiftDirection direction);

/// gnuplot script plotting q_norm against n, one curve per mu.
std::string gnuplot_script(const std::string& csv_path, const std::vector<SweepRecord>& records);

struct Case3Diagnostics {
    Complex mu;
    Complex lambda;  ///< -1 / (4 mu^2)
    Index n = 0;
    KernelDims kernel;                 ///< of (backward shift - lambda) on C^n
    double kernel_vector_norm = 0.0;   ///< ||(1, lambda, ..., lambda^(n-1))||_2
    double generalized_norm = 0.0;     ///< ||(0, 1, 2 lambda, ..., (n-1) lambda^(n-2))||_2
    double kernel_residual = 0.0;      ///< ||A x1|| on the truncation
    double generalized_residual = 0.0; ///< ||A^2 x2|| on the truncation
};

/// Throws MuTooSmall when |mu| <= 1/2.
Case3Diagnostics case3_diagnostics(Index n, Complex mu, const ToleranceConfig& cfg = {});

}  // namespace idemcomm::shift_lab
