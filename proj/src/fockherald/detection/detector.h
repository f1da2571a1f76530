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

#ifndef FOCKHERALD_DETECTION_DETECTOR_H
#define FOCKHERALD_DETECTION_DETECTOR_H

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fockherald/fock/ensemble.h"

namespace fockherald {

struct NoClick {
    bool operator==(const NoClick &) const = default;
};
struct Click {
    bool operator==(const Click &) const = default;
};
struct ExactCount {
    uint32_t count;
    bool operator==(const ExactCount &) const = default;
};

/// What a terminal detector must report for the run to be kept.
using Condition = std::variant<NoClick, Click, ExactCount>;

std::string condition_name(const Condition &condition);

/// A terminal detector with quantum efficiency `efficiency`. Dark counts are not modelled.
struct DetectorSpec {
    size_t mode;
    double efficiency;
    Condition condition;

    bool operator==(const DetectorSpec &) const = default;
};

/// Probability that `photons` incident photons produce `condition`.
///
/// Inefficiency is a loss beamsplitter in front of a perfect detector, so
///     NoClick        -> (1-eta)^n
///     Click          -> 1 - (1-eta)^n
///     ExactCount(m)  -> C(n,m) eta^m (1-eta)^(n-m)
double outcome_factor(uint32_t photons, double efficiency, const Condition &condition);

/// Measures one mode and keeps the runs consistent with the detector's condition.
///
/// Each branch splits by the photon number in the measured mode; coherences between
/// different photon numbers are discarded. The measured mode is removed from the
/// output, so higher mode indices shift down by one. Branches lighter than 1e-15 are dropped.
/// Throws UsageError when `spec.mode` no longer exists.
Ensemble measure(const Ensemble &e, const DetectorSpec &spec);

/// Measures every detector, highest mode first so that the listed indices stay valid.
Ensemble measure_all(const Ensemble &e, std::span<const DetectorSpec> specs);

/// Removes a mode without conditioning (partial trace in the Fock basis).
Ensemble trace_out(const Ensemble &e, size_t mode);

/// Joint probability of all conditions applied so far.
double heralding_probability(const Ensemble &e);

/// Click/no-click pattern distribution over the given detectors (their conditions are
/// ignored). Pattern entry i refers to specs[i]. Every mode of `e` not listed is traced out.
std::map<std::vector<bool>, double> click_pattern_distribution(
    const Ensemble &e, std::span<const DetectorSpec> specs);

/// Distribution over the number of clicks, indexed 0..specs.size().
std::vector<double> click_count_distribution(const std::map<std::vector<bool>, double> &patterns, size_t detectors);

}  // namespace fockherald

#endif
