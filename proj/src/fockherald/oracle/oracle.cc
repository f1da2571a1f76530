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

#include "fockherald/oracle/oracle.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "fockherald/errors.h"

using namespace fockherald;
using namespace fockherald::oracle;

void ArrivalModel::validate() const {
    double sum = 0;
    for (double p : arrival_probs) {
        if (!(p >= 0 && p <= 1)) {
            throw ValidationError("arrival probabilities must lie in [0,1]");
        }
        sum += p;
    }
    if (sum > 1 + 1e-12) {
        throw ValidationError("arrival probabilities sum to more than 1");
    }
    if (!(efficiency >= 0 && efficiency <= 1)) {
        throw ValidationError("efficiency must lie in [0,1]");
    }
}

double ClickDistribution::total() const {
    double t = 0;
    for (const auto &[c, p] : counts_) {
        t += p;
    }
    return t;
}

std::map<std::vector<bool>, double> ClickDistribution::patterns() const {
    std::map<std::vector<bool>, double> out;
    for (const auto &[c, p] : counts_) {
        std::vector<bool> pattern(c.size());
        for (size_t i = 0; i < c.size(); i++) {
            pattern[i] = c[i] > 0;
        }
        out[pattern] += p;
    }
    return out;
}

std::vector<double> ClickDistribution::click_count_distribution() const {
    std::vector<double> out;
    for (const auto &[c, p] : counts_) {
        size_t clicks = std::count_if(c.begin(), c.end(), [](uint32_t x) {
            return x > 0;
        });
        if (out.size() <= clicks) {
            out.resize(clicks + 1, 0.0);
        }
        out[clicks] += p;
    }
    return out;
}

double ClickDistribution::probability(const std::function<bool(const std::vector<uint32_t> &)> &predicate) const {
    double t = 0;
    for (const auto &[c, p] : counts_) {
        if (predicate(c)) {
            t += p;
        }
    }
    return t;
}

ClickDistribution oracle::enumerate_click_patterns(uint32_t n, const ArrivalModel &model) {
    model.validate();
    if (n > kMaxOraclePhotons) {
        throw EnumerationBoundError(
            "oracle enumeration is limited to n <= " + std::to_string(kMaxOraclePhotons) + " photons, got " +
            std::to_string(n));
    }
    const size_t detectors = model.arrival_probs.size();
    const size_t outcomes = detectors + 1;  // last outcome: not registered anywhere
    if (std::pow(static_cast<double>(outcomes), n) > kMaxOracleAssignments) {
        throw EnumerationBoundError(
            "oracle enumeration of " + std::to_string(outcomes) + "^" + std::to_string(n) +
            " assignments exceeds the bound of 1e8");
    }

    std::vector<double> outcome_probs(outcomes);
    double registered = 0;
    for (size_t i = 0; i < detectors; i++) {
        outcome_probs[i] = model.arrival_probs[i] * model.efficiency;
        registered += outcome_probs[i];
    }
    outcome_probs[detectors] = std::max(0.0, 1 - registered);

    // Odometer over the sequence (outcome of photon 1, ..., outcome of photon n).
    std::map<std::vector<uint32_t>, double> counts;
    std::vector<size_t> digits(n, 0);
    while (true) {
        double w = 1;
        std::vector<uint32_t> registered_counts(detectors, 0);
        for (size_t photon = 0; photon < n; photon++) {
            w *= outcome_probs[digits[photon]];
            if (digits[photon] < detectors) {
                registered_counts[digits[photon]]++;
            }
        }
        if (w > 0) {
            counts[registered_counts] += w;
        }
        size_t pos = 0;
        while (pos < n && ++digits[pos] == outcomes) {
            digits[pos] = 0;
            pos++;
        }
        if (pos == n) {
            break;
        }
    }
    return ClickDistribution(std::move(counts));
}

ArrivalModel oracle::arrival_model_for(const Circuit &circuit, size_t input_mode) {
    circuit.validate();
    if (input_mode >= circuit.mode_count) {
        throw DimensionError("input mode out of range");
    }
    std::vector<double> prob(circuit.mode_count, 0.0);
    std::vector<bool> populated(circuit.mode_count, false);
    prob[input_mode] = 1;
    populated[input_mode] = true;

    for (const auto &element : circuit.elements) {
        if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
            if (populated[bs->mode_a] && populated[bs->mode_b]) {
                throw RecombinationError(
                    "beamsplitter on modes " + std::to_string(bs->mode_a) + "," + std::to_string(bs->mode_b) +
                    " recombines paths; photon routing is not classical there");
            }
            if (!populated[bs->mode_a] && !populated[bs->mode_b]) {
                continue;
            }
            double p = prob[bs->mode_a] + prob[bs->mode_b];
            bool from_a = populated[bs->mode_a];
            // A photon keeps its port with probability r.
            prob[bs->mode_a] = p * (from_a ? bs->reflectivity : 1 - bs->reflectivity);
            prob[bs->mode_b] = p * (from_a ? 1 - bs->reflectivity : bs->reflectivity);
            populated[bs->mode_a] = populated[bs->mode_b] = true;
        } else {
            const auto &loss = std::get<LossChannel>(element);
            prob[loss.mode] *= loss.transmission;
        }
    }

    ArrivalModel model{{}, 1.0};
    for (const auto &d : circuit.detectors) {
        model.arrival_probs.push_back(prob[d.mode] * d.efficiency);
    }
    return model;
}

nlohmann::json DiscrepancyReport::to_json() const {
    return {
        {"max_abs_diff", max_abs_diff},
        {"pattern_count", pattern_count},
        {"photons", photons},
        {"detectors", detectors},
        {"oracle_accept", oracle_accept},
        {"quantum_accept", quantum_accept},
    };
}

DiscrepancyReport oracle::oracle_vs_quantum(const Circuit &circuit, uint32_t n, size_t input_mode) {
    ArrivalModel model = arrival_model_for(circuit, input_mode);
    ClickDistribution classical = enumerate_click_patterns(n, model);

    Ensemble evolved = run_elements(circuit, Ensemble::pure(fock_input(circuit.mode_count, input_mode, n)));
    auto quantum = click_pattern_distribution(evolved, circuit.detectors);
    auto oracle_patterns = classical.patterns();

    DiscrepancyReport report{0.0, 0, n, circuit.detectors.size(), 0.0, 0.0};
    std::set<std::vector<bool>> keys;
    for (const auto &[k, v] : quantum) {
        keys.insert(k);
    }
    for (const auto &[k, v] : oracle_patterns) {
        keys.insert(k);
    }
    report.pattern_count = keys.size();
    for (const auto &k : keys) {
        double q = quantum.contains(k) ? quantum.at(k) : 0.0;
        double c = oracle_patterns.contains(k) ? oracle_patterns.at(k) : 0.0;
        report.max_abs_diff = std::max(report.max_abs_diff, std::abs(q - c));
    }

    // Acceptance under the circuit's own conditions. Registered counts are what the
    // conditions see, so the oracle can judge ExactCount directly.
    report.oracle_accept = classical.probability([&](const std::vector<uint32_t> &c) {
        for (size_t i = 0; i < c.size(); i++) {
            const auto &cond = circuit.detectors[i].condition;
            if (std::holds_alternative<NoClick>(cond) && c[i] != 0) {
                return false;
            }
            if (std::holds_alternative<Click>(cond) && c[i] == 0) {
                return false;
            }
            if (const auto *exact = std::get_if<ExactCount>(&cond); exact && c[i] != exact->count) {
                return false;
            }
        }
        return true;
    });
    report.quantum_accept = heralding_probability(measure_all(evolved, circuit.detectors));
    report.max_abs_diff = std::max(report.max_abs_diff, std::abs(report.oracle_accept - report.quantum_accept));
    return report;
}
