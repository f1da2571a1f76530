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

#ifndef FOCKHERALD_ORACLE_ORACLE_H
#define FOCKHERALD_ORACLE_ORACLE_H

#include <functional>
#include <map>
#include <vector>

#include "fockherald/optics/circuit.h"
#include "json.hpp"

namespace fockherald::oracle {

/// Classical photon routing: each photon independently arrives at detector i with
/// probability arrival_probs[i] and is then registered with probability `efficiency`.
/// Probability left over (1 - sum) goes to unmonitored ports.
struct ArrivalModel {
    std::vector<double> arrival_probs;
    double efficiency;

    void validate() const;
};

/// Exact distribution over per-detector registered photon counts.
class ClickDistribution {
   public:
    explicit ClickDistribution(std::map<std::vector<uint32_t>, double> counts) : counts_(std::move(counts)) {
    }

    const std::map<std::vector<uint32_t>, double> &counts() const {
        return counts_;
    }
    double total() const;

    /// Marginal over click patterns (count > 0 per detector).
    std::map<std::vector<bool>, double> patterns() const;
    /// P(number of clicking detectors = j).
    std::vector<double> click_count_distribution() const;
    double probability(const std::function<bool(const std::vector<uint32_t> &)> &predicate) const;

   private:
    std::map<std::vector<uint32_t>, double> counts_;
};

inline constexpr uint32_t kMaxOraclePhotons = 12;
inline constexpr double kMaxOracleAssignments = 1e8;

/// Enumerates every assignment of n distinguishable photons to (detector registered) or
/// (not registered) outcomes, one photon at a time, and accumulates the product weights.
/// Throws EnumerationBoundError when n > 12 or (detectors+1)^n > 1e8.
ClickDistribution enumerate_click_patterns(uint32_t n, const ArrivalModel &model);

/// Arrival model of a non-recombining circuit for photons injected into `input_mode`.
/// Detector efficiencies are folded into the arrival probabilities (the returned model has
/// efficiency 1), with arrival_probs ordered as circuit.detectors.
/// Throws RecombinationError if a beamsplitter mixes two already-populated modes.
ArrivalModel arrival_model_for(const Circuit &circuit, size_t input_mode = 0);

struct DiscrepancyReport {
    double max_abs_diff;
    size_t pattern_count;
    uint32_t photons;
    size_t detectors;
    double oracle_accept;
    double quantum_accept;

    nlohmann::json to_json() const;
};

/// Compares the classical click-pattern distribution against a full Fock simulation of the
/// circuit with `n` photons in `input_mode`. Also compares the probability that every
/// detector condition holds.
DiscrepancyReport oracle_vs_quantum(const Circuit &circuit, uint32_t n, size_t input_mode = 0);

}  // namespace fockherald::oracle

#endif
