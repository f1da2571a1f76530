// Copyright 2026 The fockherald Authors
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

#ifndef FOCKHERALD_CLI_COMMANDS_H
#define FOCKHERALD_CLI_COMMANDS_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fockherald/cli/csv.h"
#include "json.hpp"

namespace fockherald::cli {

inline constexpr const char *kToolVersion = "0.1.0";
inline constexpr uint64_t kDefaultSeed = 20260101;

enum class OutputFormat { Csv, Json };

struct NamedTable {
    std::string stem;
    Table table;
};

/// Everything a subcommand computed, before it is written anywhere.
struct CommandResult {
    std::string command;
    nlohmann::json params;
    std::vector<NamedTable> tables;
    /// Non-zero for validation failures.
    int exit_code = 0;
    /// Human-readable summary printed to stdout.
    std::string summary;
};

/// Parses "a,b,c" or "start:stop:count" (inclusive, evenly spaced).
/// Throws UsageError on malformed text. An empty string gives an empty list.
std::vector<double> parse_list(const std::string &text);

struct SuppressionParams {
    std::vector<double> efficiencies{0.8, 0.9, 0.99};
    std::vector<double> reflectivities{0.011, 0.1, 0.5};
    uint32_t n_max = 6;
};
/// Columns eta_eff,eta_ref,n,p_m1.
CommandResult cmd_suppression(const SuppressionParams &p);

struct CascadeParams {
    std::vector<double> ports{2, 4, 8, 16};
    std::vector<double> efficiencies{0.8, 0.9, 1.0};
    uint32_t n_max = 4;
};
/// Columns ports,eta_eff,n,m,probability,analytic. `analytic` is filled on rows with m = n.
CommandResult cmd_cascade(const CascadeParams &p);

struct TdmParams {
    double coupling = 0.5;
    double loop_transmission = 1.0;
    uint32_t round_trips = 2;
    double efficiency = 1.0;
    uint32_t n_max = 4;
    /// Out-couple 1/(R - r) on round trip r so every trip is equally likely.
    bool uniform_schedule = false;
};
/// Columns n,m,probability,remainder.
CommandResult cmd_tdm(const TdmParams &p);

struct ChainParams {
    std::vector<double> ks{1, 2, 3};
    std::vector<double> efficiencies{0.9, 0.99, 1.0};
    double first_reflectivity = 0.1;
    uint32_t n_max = 6;
};
/// Columns k,eta_eff,eta_ref,n,p_accept,p_analytic.
CommandResult cmd_chain(const ChainParams &p);

struct CnotSweepParams {
    std::vector<double> efficiencies{0.99};
    std::vector<double> reflectivities{0.011};
    /// ideal | nondiscriminating | chain
    std::string detector_model = "chain";
    bool probes_only = false;
    size_t random_starts = 8;
    std::optional<std::filesystem::path> config;
    uint64_t seed = kDefaultSeed;
    size_t threads = 1;
};
/// Columns eta_eff,eta_ref,f_min,p_at_fmin,p_min,argmin_params.
CommandResult cmd_cnot_sweep(const CnotSweepParams &p);

struct ValidateParams {
    std::optional<std::filesystem::path> config;
};
/// Columns suite,cases,max_discrepancy,tolerance,passed. Exit code 1 on any failure.
CommandResult cmd_validate(const ValidateParams &p);

struct RunOptions {
    std::filesystem::path out_dir = ".";
    uint64_t seed = kDefaultSeed;
    OutputFormat format = OutputFormat::Csv;
};

/// Writes each table to <out>/<stem>.csv|json and <out>/<command>.manifest.json.
/// Returns the manifest.
nlohmann::json write_result(const CommandResult &result, const RunOptions &options, double seconds);

/// Full command-line entry point. Exit codes: 0 success, 1 validation failure, 2 usage error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace fockherald::cli

#endif
