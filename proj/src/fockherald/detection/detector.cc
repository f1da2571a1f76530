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

#include "fockherald/detection/detector.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "fockherald/errors.h"

using namespace fockherald;

namespace {

constexpr double kBranchDropThreshold = 1e-15;

double binomial(uint32_t n, uint32_t k) {
    double out = 1;
    for (uint32_t j = 1; j <= k; j++) {
        out = out * (n - k + j) / j;
    }
    return out;
}

/// Splits a branch by photon number in `mode` and hands each (photons, reduced state) to `sink`.
template <typename Sink>
void split_by_count(const SparseState &state, size_t mode, Sink &&sink) {
    std::map<uint32_t, SparseState> parts;
    for (const auto &[occ, amp] : state.amplitudes()) {
        auto [it, inserted] = parts.try_emplace(occ[mode], state.mode_count() - 1);
        it->second.add(occ.without(mode), amp);
    }
    for (auto &[photons, part] : parts) {
        part.prune();
        sink(photons, part);
    }
}

void check_mode(const Ensemble &e, size_t mode) {
    if (mode >= e.mode_count()) {
        throw UsageError(
            "mode " + std::to_string(mode) + " is not present (ensemble has " + std::to_string(e.mode_count()) +
            " modes; it may already have been measured)");
    }
}

}  // namespace

std::string fockherald::condition_name(const Condition &condition) {
    if (std::holds_alternative<NoClick>(condition)) {
        return "no_click";
    }
    if (std::holds_alternative<Click>(condition)) {
        return "click";
    }
    return "exact_count(" + std::to_string(std::get<ExactCount>(condition).count) + ")";
}

double fockherald::outcome_factor(uint32_t photons, double efficiency, const Condition &condition) {
    const double miss = 1 - efficiency;
    if (std::holds_alternative<NoClick>(condition)) {
        return std::pow(miss, photons);
    }
    if (std::holds_alternative<Click>(condition)) {
        return 1 - std::pow(miss, photons);
    }
    uint32_t m = std::get<ExactCount>(condition).count;
    if (m > photons) {
        return 0;
    }
    return binomial(photons, m) * std::pow(efficiency, m) * std::pow(miss, photons - m);
}

Ensemble fockherald::measure(const Ensemble &e, const DetectorSpec &spec) {
    check_mode(e, spec.mode);
    if (!(spec.efficiency >= 0 && spec.efficiency <= 1)) {
        throw ValidationError("detector efficiency must lie in [0,1]");
    }
    Ensemble out(e.mode_count() - 1);
    for (const auto &branch : e.branches()) {
        split_by_count(branch.state, spec.mode, [&](uint32_t photons, const SparseState &part) {
            double w = branch.weight * part.norm_squared() * outcome_factor(photons, spec.efficiency, spec.condition);
            if (w >= kBranchDropThreshold) {
                out.add(w / part.norm_squared(), part);
            }
        });
    }
    return out;
}

Ensemble fockherald::measure_all(const Ensemble &e, std::span<const DetectorSpec> specs) {
    std::vector<DetectorSpec> sorted(specs.begin(), specs.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto &x, const auto &y) {
        return x.mode > y.mode;
    });
    for (size_t k = 1; k < sorted.size(); k++) {
        if (sorted[k].mode == sorted[k - 1].mode) {
            throw UsageError("two detectors on mode " + std::to_string(sorted[k].mode));
        }
    }
    Ensemble current = e;
    for (const auto &spec : sorted) {
        current = measure(current, spec);
    }
    return current;
}

Ensemble fockherald::trace_out(const Ensemble &e, size_t mode) {
    check_mode(e, mode);
    Ensemble out(e.mode_count() - 1);
    for (const auto &branch : e.branches()) {
        split_by_count(branch.state, mode, [&](uint32_t, const SparseState &part) {
            out.add(branch.weight, part);
        });
    }
    return out;
}

double fockherald::heralding_probability(const Ensemble &e) {
    return e.total_weight();
}

std::map<std::vector<bool>, double> fockherald::click_pattern_distribution(
    const Ensemble &e, std::span<const DetectorSpec> specs) {
    std::set<size_t> seen;
    for (const auto &spec : specs) {
        if (!seen.insert(spec.mode).second) {
            throw UsageError("two detectors on mode " + std::to_string(spec.mode));
        }
    }

    // Collapse every branch onto a weight per photon-number record of the detected modes.
    // Detection is diagonal in the Fock basis, so only |amplitude|^2 per record matters.
    std::map<std::vector<uint32_t>, double> records;
    for (const auto &branch : e.branches()) {
        for (const auto &[occ, amp] : branch.state.amplitudes()) {
            std::vector<uint32_t> rec(specs.size());
            for (size_t i = 0; i < specs.size(); i++) {
                if (specs[i].mode >= e.mode_count()) {
                    throw UsageError("detector mode " + std::to_string(specs[i].mode) + " not present");
                }
                rec[i] = occ[specs[i].mode];
            }
            records[rec] += branch.weight * std::norm(amp);
        }
    }

    std::map<std::vector<bool>, double> out;
    for (const auto &[rec, weight] : records) {
        // Enumerate the click patterns this record can produce.
        std::map<std::vector<bool>, double> partial{{{}, weight}};
        for (size_t i = 0; i < specs.size(); i++) {
            std::map<std::vector<bool>, double> next;
            double p_none = outcome_factor(rec[i], specs[i].efficiency, NoClick{});
            double p_click = outcome_factor(rec[i], specs[i].efficiency, Click{});
            for (const auto &[prefix, w] : partial) {
                auto extended = prefix;
                extended.push_back(false);
                if (p_none > 0) {
                    next[extended] += w * p_none;
                }
                extended.back() = true;
                if (p_click > 0) {
                    next[extended] += w * p_click;
                }
            }
            partial = std::move(next);
        }
        for (const auto &[pat, w] : partial) {
            out[pat] += w;
        }
    }
    return out;
}

std::vector<double> fockherald::click_count_distribution(
    const std::map<std::vector<bool>, double> &patterns, size_t detectors) {
    std::vector<double> out(detectors + 1, 0.0);
    for (const auto &[pattern, w] : patterns) {
        out[std::count(pattern.begin(), pattern.end(), true)] += w;
    }
    return out;
}
