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

#include "fockherald/analytic/formulas.h"

#include <cmath>
#include <string>
#include <vector>

#include "fockherald/errors.h"

using namespace fockherald;

namespace {

void check_probability(double p, const char *what) {
    if (!(p >= 0 && p <= 1)) {
        throw DomainError(std::string(what) + " must lie in [0,1]");
    }
}

double binomial(uint32_t n, uint32_t k) {
    double out = 1;
    for (uint32_t j = 1; j <= k; j++) {
        out = out * (n - k + j) / j;
    }
    return out;
}

double log_factorial(uint32_t n) {
    return std::lgamma(static_cast<double>(n) + 1);
}

/// Sums over n_i >= 1 for the remaining `slots` detectors, given photons still unassigned.
/// `log_coeff` accumulates -sum log(n_i!).
double sum_compositions(
    uint32_t slots, uint32_t remaining, uint32_t total, double log_coeff, double p_trig, double p_loss) {
    if (slots == 0) {
        uint32_t lost = remaining;
        uint32_t triggered = total - remaining;
        double log_multinomial = log_factorial(total) + log_coeff - log_factorial(lost);
        return std::exp(log_multinomial) * std::pow(p_trig, triggered) * std::pow(p_loss, lost);
    }
    double acc = 0;
    for (uint32_t here = 1; here + (slots - 1) <= remaining; here++) {
        acc += sum_compositions(slots - 1, remaining - here, total, log_coeff - log_factorial(here), p_trig, p_loss);
    }
    return acc;
}

}  // namespace

double analytic::cascade_prob_correct(uint32_t n, uint64_t ports, double efficiency) {
    check_probability(efficiency, "efficiency");
    if (ports == 0) {
        throw DomainError("cascade needs at least one output port");
    }
    if (n > ports) {
        throw DomainError(
            std::to_string(n) + " photons cannot all be counted with " + std::to_string(ports) + " ports");
    }
    double out = std::pow(efficiency, n);
    const double N = static_cast<double>(ports);
    for (uint32_t i = 1; i < n; i++) {
        out *= (N - i) / N;
    }
    return out;
}

double analytic::chain_prob_m1_binomial_sum(uint32_t n, double reflectivity, double efficiency) {
    check_probability(reflectivity, "reflectivity");
    check_probability(efficiency, "efficiency");
    const double p_trig = reflectivity * efficiency;
    const double p_loss = 1 - efficiency;
    double acc = 0;
    for (uint32_t i = 1; i <= n; i++) {
        acc += binomial(n, i) * std::pow(p_trig, i) * std::pow(p_loss, n - i);
    }
    return acc;
}

double analytic::chain_prob_m1_closed_form(uint32_t n, double reflectivity, double efficiency) {
    check_probability(reflectivity, "reflectivity");
    check_probability(efficiency, "efficiency");
    if (efficiency >= 1) {
        throw DomainError("closed form is singular at unit efficiency");
    }
    const double miss = 1 - efficiency;
    const double x = efficiency * reflectivity / miss;
    // (1+x)^n - 1 via expm1/log1p to keep precision for small x.
    return std::pow(miss, n) * std::expm1(n * std::log1p(x));
}

double analytic::chain_prob_m1(uint32_t n, double reflectivity, double efficiency) {
    if (1 - efficiency < 1e-9) {
        return chain_prob_m1_binomial_sum(n, reflectivity, efficiency);
    }
    return chain_prob_m1_closed_form(n, reflectivity, efficiency);
}

double analytic::chain_prob_mk(uint32_t n, uint32_t k, double reflectivity, double efficiency) {
    check_probability(reflectivity, "reflectivity");
    check_probability(efficiency, "efficiency");
    if (k == 0) {
        throw DomainError("chain needs k >= 1");
    }
    if (k * reflectivity > 1 + 1e-12) {
        throw InfeasibleUniformityError(
            "k * reflectivity = " + std::to_string(k * reflectivity) + " exceeds 1; no uniform chain exists");
    }
    if (n < k) {
        return 0;
    }
    return sum_compositions(k, n, n, 0.0, reflectivity * efficiency, 1 - efficiency);
}
