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

#ifndef FOCKHERALD_ANALYTIC_FORMULAS_H
#define FOCKHERALD_ANALYTIC_FORMULAS_H

#include <cstdint>

namespace fockherald::analytic {

/// Probability that an N-output uniform cascade with detector efficiency `efficiency`
/// reports exactly the `n` incident photons:
///     eta^n N! / (N^n (N-n)!)
/// Throws DomainError when n > N.
double cascade_prob_correct(uint32_t n, uint64_t ports, double efficiency);

/// Probability that a single-beamsplitter chain detector reports one photon for an
/// `n`-photon input, i.e. the reflected detector clicks and the transmitted one stays dark.
/// Uses the closed form, falling back to the binomial sum when 1 - efficiency < 1e-9.
double chain_prob_m1(uint32_t n, double reflectivity, double efficiency);

/// sum_{i=1..n} C(n,i) (r eta)^i (1-eta)^(n-i).
double chain_prob_m1_binomial_sum(uint32_t n, double reflectivity, double efficiency);

/// (1-eta)^n [ (1 + eta r / (1-eta))^n - 1 ]. Requires efficiency < 1.
double chain_prob_m1_closed_form(uint32_t n, double reflectivity, double efficiency);

/// Probability that a k-detector uniform chain reports k photons: every reflected detector
/// clicks and the terminal one stays dark. Sums the multinomial
///     n! / (n_1! ... n_k! n_loss!) (r eta)^(n_trig) (1-eta)^(n_loss)
/// over n_i >= 1. Throws InfeasibleUniformityError when k r > 1.
double chain_prob_mk(uint32_t n, uint32_t k, double reflectivity, double efficiency);

}  // namespace fockherald::analytic

#endif
