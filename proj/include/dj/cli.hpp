// Copyright 2026 The dj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Report builders behind the `dj` command-line tool. Each command produces a
// CommandReport holding both a JSON document and its stable text rendering;
// run_cli() parses flags and writes one of the two.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or
// precondition error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dj/protocol.hpp"

namespace dj::cli {

enum class OutputFormat { Text, Json };

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Minimum joint violation the infeasibility sweep must stay above.
inline constexpr double kSweepBoundThreshold = 0.1;

struct CommandReport {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    bool pass = false;
    std::string text;

    nlohmann::json document() const;
    int exit_code() const { return pass ? kExitPass : kExitCheckFailed; }
};

/// Single-document JSON (keys sorted, two-space indent, trailing newline) or
/// the line-oriented text form.
std::string render(const CommandReport& report, OutputFormat format);

struct KickbackCheck {
    FunctionId function;
    int control;
    double max_error;
    bool pass;
};

struct OracleCheck {
    FunctionId function;
    bool permutation;
    bool involution;
    double state_involution_error;  // on the prepared input
    double norm_error;              // | ||O psi|| - ||psi|| |
    bool pass;
};

struct OracleOutcome {
    FunctionId function;
    Verdict expected;
    DJOutcome outcome;
    bool pass;
};

struct VerificationReport {
    double theta = 0.0;
    std::vector<OracleOutcome> outcomes;
    std::vector<KickbackCheck> kickback;
    std::vector<OracleCheck> oracles;
    bool pass = false;
};

/// Runs the protocol against all four oracles plus the supporting checks.
/// Throws InvalidAngle for non-finite theta.
VerificationReport verify_all(double theta);

CommandReport cmd_matrices();
/// Throws InvalidStep when a grid step is given and out of range.
CommandReport cmd_derive(std::optional<double> grid_step);
CommandReport cmd_verify(double theta);
CommandReport cmd_classical();
/// Throws std::invalid_argument when samples < 1.
CommandReport cmd_impossible(std::int64_t samples, std::uint64_t seed);

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dj::cli
