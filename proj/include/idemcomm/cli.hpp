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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "idemcomm/core_linalg.hpp"
#include "idemcomm/factorizer.hpp"
#include "idemcomm/shift_lab.hpp"

namespace idemcomm::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,
    kObstructed = 2,
    kVerificationFailed = 3,
};

enum class Command { Factorize, Verify, RingDemo, ShiftSweep };

struct CliConfig {
    Command command = Command::Factorize;
    std::vector<std::filesystem::path> inputs;
    std::optional<std::filesystem::path> output;
    std::optional<std::filesystem::path> plot;
    ToleranceConfig tolerances;
    bool rational = false;
    std::vector<Index> dims;
    std::vector<Complex> mus;
    shift_lab::ShiftDirection direction = shift_lab::ShiftDirection::Forward;

    /// Throws idemcomm::Error describing the first violated constraint.
    void validate() const;
};

/// Full entry point: parses argv, dispatches, maps every outcome to an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err);

int run_factorize(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_ring_demo(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_shift_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Verdict line, optional note, branch angle, residual lines, then matrices.
std::string format_report(const FactorizationResult& result);

}  // namespace idemcomm::cli
