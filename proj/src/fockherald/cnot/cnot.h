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

#ifndef FOCKHERALD_CNOT_CNOT_H
#define FOCKHERALD_CNOT_CNOT_H

#include <array>
#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "fockherald/optics/circuit.h"
#include "json.hpp"

namespace fockherald::cnot {

/// Dual-rail qubit: |0>_L = |0>_H |1>_V and |1>_L = |1>_H |0>_V.
struct DualRailQubit {
    size_t mode_h;
    size_t mode_v;
    bool operator==(const DualRailQubit &) const = default;
};

/// Number-resolving detectors: "1" heralds project on exactly one photon, "0" on none.
struct IdealNumberResolving {
    bool operator==(const IdealNumberResolving &) const = default;
};
/// Click/no-click detectors everywhere; a "1" herald is accepted on any click.
struct NonDiscriminating {
    double efficiency;
    bool operator==(const NonDiscriminating &) const = default;
};
/// Each "1" herald becomes a one-beamsplitter chain detector: the reflected port must click
/// and the transmitted port must stay dark. "0" heralds are no-click detectors.
struct ChainDetector {
    double reflectivity;
    double efficiency;
    bool operator==(const ChainDetector &) const = default;
};

using DetectorModel = std::variant<IdealNumberResolving, NonDiscriminating, ChainDetector>;

std::string detector_model_name(const DetectorModel &model);

/// Wiring and beamsplitter settings of a heralded CNOT.
struct CnotConfig {
    size_t mode_count = 8;
    DualRailQubit control{0, 1};
    DualRailQubit target{2, 3};
    /// Modes fed with one ancilla photon each.
    std::vector<size_t> ancilla_photon_modes{4, 5};
    /// Outputs that must register exactly one photon.
    std::vector<size_t> herald_one_modes{4, 5};
    /// Outputs that must register no photon.
    std::vector<size_t> herald_zero_modes{6, 7};
    std::vector<BeamSplitter> beamsplitters;
    DetectorModel detector_model = IdealNumberResolving{};

    /// Throws ValidationError / DimensionError.
    void validate() const;
    CnotConfig with_model(DetectorModel model) const;

    bool operator==(const CnotConfig &) const = default;
};

/// Simplified KLM CNOT: 50/50 target rotations around a controlled-sign built from two
/// two-beamsplitter nonlinear-sign gates, each with one ancilla photon and one vacuum mode.
/// Heralds with probability ((3 - sqrt 2) / 7)^2 ~ 0.0513 under ideal detection.
CnotConfig default_cnot_config();

nlohmann::json config_to_json(const CnotConfig &cfg);
CnotConfig config_from_json(const nlohmann::json &j);
CnotConfig load_config(const std::string &path);

nlohmann::json detector_model_to_json(const DetectorModel &model);
DetectorModel detector_model_from_json(const nlohmann::json &j);

/// Amplitudes of |control target> in the order |00>, |01>, |10>, |11>.
using TwoQubitState = std::array<std::complex<double>, 4>;

TwoQubitState normalized(const TwoQubitState &psi);
TwoQubitState apply_ideal_cnot(const TwoQubitState &psi);

/// Full circuit input: logical state on the rails, one photon in each ancilla mode.
SparseState encode_input(const CnotConfig &cfg, const TwoQubitState &psi);

/// Logical state on the four unmeasured output modes, ordered as they survive measurement.
SparseState encode_output(const CnotConfig &cfg, const TwoQubitState &psi);

/// Gate network plus heralding detectors for the config's detector model. Chain detectors
/// add one mode per "1" herald after the gate modes.
Circuit build_cnot(const CnotConfig &cfg);

struct GateResult {
    Ensemble output;
    double herald_probability;
};

GateResult apply_gate(const CnotConfig &cfg, const TwoQubitState &psi);

struct FidelityProbability {
    double fidelity;
    double probability;
};

/// P = sum w_b, F = sum w_b |<ideal|phi_b>|^2 / P. Throws UndefinedFidelityError when P = 0.
FidelityProbability fidelity_and_probability(const Ensemble &e, const SparseState &ideal);

struct CalibrationEntry {
    std::string label;
    double fidelity;
    double herald_probability;
};

struct CalibrationReport {
    bool passed;
    double herald_probability;
    double herald_spread;
    std::vector<CalibrationEntry> entries;
    std::vector<std::string> problems;

    std::string diagnostics() const;
    nlohmann::json to_json() const;
};

inline constexpr double kCalibrationTolerance = 1e-9;

/// Runs the config with ideal detectors on the four basis inputs and (|0>+|1>)/sqrt2 |0>,
/// checking unit fidelity and an input-independent, nonzero herald.
CalibrationReport calibrate(const CnotConfig &cfg);

/// Throws ValidationError carrying the per-input diagnostics when calibration fails.
void require_calibrated(const CnotConfig &cfg);

}  // namespace fockherald::cnot

#endif
