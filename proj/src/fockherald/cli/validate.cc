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

#include "fockherald/cli/validate.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <span>

#include "fockherald/analytic/formulas.h"
#include "fockherald/oracle/oracle.h"
#include "fockherald/schemes/schemes.h"

using namespace fockherald;
using namespace fockherald::cli;

namespace {

constexpr double kAgreementTolerance = 1e-12;

class SuiteTracker {
   public:
    explicit SuiteTracker(std::string name) : name_(std::move(name)), start_(std::chrono::steady_clock::now()) {
    }

    void compare(double a, double b) {
        cases_++;
        max_ = std::max(max_, std::abs(a - b));
    }

    void record(double discrepancy) {
        cases_++;
        max_ = std::max(max_, discrepancy);
    }

    SuiteResult finish() const {
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return {name_, cases_, max_, kAgreementTolerance, max_ < kAgreementTolerance, seconds};
    }

   private:
    std::string name_;
    std::chrono::steady_clock::time_point start_;
    size_t cases_ = 0;
    double max_ = 0;
};

}  // namespace

nlohmann::json SuiteResult::to_json() const {
    return {
        {"name", name},
        {"cases", cases},
        {"max_discrepancy", max_discrepancy},
        {"tolerance", tolerance},
        {"passed", passed},
        {"seconds", seconds},
    };
}

SuiteResult cli::cascade_agreement_suite() {
    SuiteTracker suite("cascade");
    for (size_t ports : {2, 4, 8, 16}) {
        for (double eff : {0.8, 0.9, 1.0}) {
            Circuit tree = schemes::build_tree_nport(ports, eff);
            for (uint32_t n = 1; n <= std::min<size_t>(4, ports); n++) {
                double analytic = analytic::cascade_prob_correct(n, ports, eff);
                double simulated = schemes::simulate_cascade(n, {ports, eff})[n];
                auto model = oracle::arrival_model_for(tree);
                double enumerated = oracle::enumerate_click_patterns(n, model).click_count_distribution()[n];
                suite.compare(analytic, simulated);
                suite.compare(analytic, enumerated);
                suite.record(oracle::oracle_vs_quantum(tree, n).max_abs_diff);
            }
        }
    }
    return suite.finish();
}

SuiteResult cli::chain_m1_agreement_suite() {
    SuiteTracker suite("chain_m1");
    for (double ref : {0.011, 0.1, 0.5}) {
        for (double eff : {0.9, 0.99, 1.0}) {
            Circuit chain = schemes::build_chain_detector({1, ref, eff});
            for (uint32_t n = 0; n <= 6; n++) {
                double sum = analytic::chain_prob_m1_binomial_sum(n, ref, eff);
                if (eff < 1) {
                    suite.compare(sum, analytic::chain_prob_m1_closed_form(n, ref, eff));
                }
                suite.compare(sum, analytic::chain_prob_m1(n, ref, eff));
                suite.compare(sum, schemes::simulate_chain(n, {1, ref, eff}));
                auto report = oracle::oracle_vs_quantum(chain, n);
                suite.compare(sum, report.oracle_accept);
                suite.compare(sum, report.quantum_accept);
                suite.record(report.max_abs_diff);
            }
        }
    }
    return suite.finish();
}

SuiteResult cli::chain_mk_agreement_suite() {
    SuiteTracker suite("chain_mk");
    for (uint32_t k = 1; k <= 10; k++) {
        for (double scale : {0.25, 0.5, 1.0}) {
            double first = scale / k;
            auto arrival = oracle::arrival_model_for(schemes::build_chain_detector({k, first, 1.0}));
            auto reflecting = std::span(arrival.arrival_probs).first(k);
            auto [lo, hi] = std::minmax_element(reflecting.begin(), reflecting.end());
            suite.record(*hi - *lo);
            suite.compare(*lo, first);
        }
    }
    for (uint32_t k = 1; k <= 3; k++) {
        for (double ref : {0.05, 0.2, 1.0 / 3}) {
            for (double eff : {0.9, 1.0}) {
                Circuit chain = schemes::build_chain_detector({k, ref, eff});
                for (uint32_t n = 0; n <= 6; n++) {
                    double formula = analytic::chain_prob_mk(n, k, ref, eff);
                    auto report = oracle::oracle_vs_quantum(chain, n);
                    suite.compare(formula, report.oracle_accept);
                    suite.compare(formula, report.quantum_accept);
                    suite.compare(formula, schemes::simulate_chain(n, {k, ref, eff}));
                    suite.record(report.max_abs_diff);
                }
            }
        }
    }
    return suite.finish();
}

bool ValidationReport::passed() const {
    return calibration.passed && std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) {
               return s.passed;
           });
}

nlohmann::json ValidationReport::to_json() const {
    nlohmann::json j;
    j["passed"] = passed();
    j["suites"] = nlohmann::json::array();
    for (const auto &s : suites) {
        j["suites"].push_back(s.to_json());
    }
    j["calibration"] = calibration.to_json();
    return j;
}

ValidationReport cli::run_validation(const cnot::CnotConfig &cfg) {
    ValidationReport report;
    report.suites.push_back(cascade_agreement_suite());
    report.suites.push_back(chain_m1_agreement_suite());
    report.suites.push_back(chain_mk_agreement_suite());
    report.calibration = cnot::calibrate(cfg);
    return report;
}
