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

#ifndef FOCKHERALD_CLI_VALIDATE_H
#define FOCKHERALD_CLI_VALIDATE_H

#include <string>
#include <vector>

#include "fockherald/cnot/cnot.h"
#include "json.hpp"

namespace fockherald::cli {

struct SuiteResult {
    std::string name;
    size_t cases;
    double max_discrepancy;
    double tolerance;
    bool passed;
    double seconds;

    nlohmann::json to_json() const;
};

/// Cascade P(m=n): closed form vs classical enumeration vs Fock simulation of the
/// binary tree, for n <= min(4, N), N in {2,4,8,16}, efficiency in {0.8,0.9,1}.
/// Also compares the full click-pattern distributions.
SuiteResult cascade_agreement_suite();

/// Single-reflector chain acceptance for n <= 6: closed form (efficiency < 1),
/// binomial sum, classical enumeration and Fock simulation.
SuiteResult chain_m1_agreement_suite();

/// Chain reflectivities from the uniformity recursion give equal single-photon
/// arrival probabilities (k <= 10), and the multi-detector acceptance agrees across
/// the multinomial formula, enumeration and simulation for n <= 6, k <= 3.
SuiteResult chain_mk_agreement_suite();

struct ValidationReport {
    std::vector<SuiteResult> suites;
    cnot::CalibrationReport calibration;

    bool passed() const;
    nlohmann::json to_json() const;
};

ValidationReport run_validation(const cnot::CnotConfig &cfg);

}  // namespace fockherald::cli

#endif
