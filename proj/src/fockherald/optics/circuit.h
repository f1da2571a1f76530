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

#ifndef FOCKHERALD_OPTICS_CIRCUIT_H
#define FOCKHERALD_OPTICS_CIRCUIT_H

#include <vector>

#include "fockherald/detection/detector.h"
#include "fockherald/optics/elements.h"
#include "json.hpp"

namespace fockherald {

/// Linear-optical network followed by terminal detectors.
///
/// Elements act in order; detectors are applied after all elements and must sit on
/// distinct modes. Modes without a detector are left in the output state.
struct Circuit {
    size_t mode_count = 0;
    std::vector<Element> elements;
    std::vector<DetectorSpec> detectors;

    /// Throws DimensionError / ValidationError.
    void validate() const;

    /// Modes carrying no detector, ascending.
    std::vector<size_t> unmeasured_modes() const;

    bool operator==(const Circuit &) const = default;
};

/// Applies the circuit's elements only.
Ensemble run_elements(const Circuit &circuit, const Ensemble &input);

/// Applies elements, then every detector with its condition. The result lives on the
/// unmeasured modes, in ascending original order.
Ensemble run(const Circuit &circuit, const SparseState &input);

/// `n` photons in `mode`, vacuum elsewhere.
SparseState fock_input(size_t mode_count, size_t mode, uint32_t photons);

nlohmann::json circuit_to_json(const Circuit &circuit);
/// Throws ValidationError on schema problems.
Circuit circuit_from_json(const nlohmann::json &j);

nlohmann::json detector_to_json(const DetectorSpec &spec);
DetectorSpec detector_from_json(const nlohmann::json &j);

}  // namespace fockherald

#endif
