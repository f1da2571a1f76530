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

#ifndef FOCKHERALD_CNOT_SEARCH_H
#define FOCKHERALD_CNOT_SEARCH_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fockherald/cnot/channel.h"

namespace fockherald::cnot {

/// Hyperspherical coordinates of a two-qubit pure state with the global phase fixed:
/// three magnitude angles in [0, pi/2] and three relative phases in [0, 2 pi).
using StateAngles = std::array<double, 6>;

TwoQubitState state_from_angles(const StateAngles &angles);
StateAngles angles_from_state(const TwoQubitState &psi);

/// The 4 logical basis states, 8 product superpositions and the 4 Bell states.
std::vector<std::pair<std::string, TwoQubitState>> probe_states();

struct SearchSettings {
    uint64_t seed = 20260101;
    size_t random_starts = 8;
    /// A start stops once a full coordinate sweep improves F by less than this.
    double tolerance = 1e-6;
    size_t max_sweeps = 200;
    /// Evaluate the 16 probes only.
    bool probes_only = false;
};

struct GateMetrics {
    double fidelity_min;
    /// Heralding probability at the fidelity minimizer.
    double probability_at_fmin;
    /// Global minimum of the heralding probability over all inputs.
    double probability_min;
    StateAngles argmin_angles;
    TwoQubitState argmin_state;
    std::string argmin_label;
    size_t evaluations;
};

/// Minimizes the heralded fidelity over all normalized two-qubit inputs.
///
/// Every probe is evaluated first. Refinement then runs coordinate-wise golden-section
/// sweeps from the worst probe and from `random_starts` seeded random points. The result
/// is never worse than the best probe.
GateMetrics worst_case_search(const HeraldedChannel &channel, const SearchSettings &settings);
GateMetrics worst_case_search(const CnotConfig &cfg, const SearchSettings &settings);

struct SweepCell {
    double efficiency;
    double reflectivity;
    GateMetrics metrics;
};

/// GateMetrics on the efficiency x reflectivity grid, efficiency-major. With
/// `non_discriminating` every cell uses click detectors and reports reflectivity 1.
/// Cells run on up to `threads` workers; results do not depend on the thread count.
std::vector<SweepCell> sweep_metrics(
    const CnotConfig &base,
    const std::vector<double> &efficiencies,
    const std::vector<double> &reflectivities,
    const SearchSettings &settings,
    size_t threads,
    bool non_discriminating = false);

/// FOCKHERALD_THREADS if set to a positive integer, else the hardware concurrency.
size_t sweep_threads_from_env();

}  // namespace fockherald::cnot

#endif
