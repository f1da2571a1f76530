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

#ifndef FOCKHERALD_OPTICS_ELEMENTS_H
#define FOCKHERALD_OPTICS_ELEMENTS_H

#include <variant>
#include <vector>

#include "fockherald/fock/ensemble.h"
#include "fockherald/fock/sparse_state.h"

namespace fockherald {

/// Lossless two-mode beamsplitter.
///
/// Creation operators transform as
///     a^dag -> sqrt(r) a^dag + sqrt(1-r) b^dag
///     b^dag -> sqrt(1-r) a^dag - sqrt(r) b^dag
/// with r the reflectivity. A photon entering `mode_a` leaves through `mode_a` (the
/// reflected port) with probability r. The mode matrix is real, symmetric and its own
/// inverse.
struct BeamSplitter {
    size_t mode_a;
    size_t mode_b;
    double reflectivity;

    bool operator==(const BeamSplitter &) const = default;
};

/// Photon loss on one mode; each photon survives independently with probability `transmission`.
struct LossChannel {
    size_t mode;
    double transmission;

    bool operator==(const LossChannel &) const = default;
};

using Element = std::variant<BeamSplitter, LossChannel>;

/// Throws ValidationError / DimensionError if the element is malformed for `mode_count` modes.
void validate_element(const Element &element, size_t mode_count);

SparseState apply_beamsplitter(const SparseState &s, const BeamSplitter &bs);
Ensemble apply_beamsplitter(const Ensemble &e, const BeamSplitter &bs);

/// Splits every branch by the number of photons lost from the lossy mode.
Ensemble apply_loss(const Ensemble &e, const LossChannel &channel);

Ensemble apply_element(const Ensemble &e, const Element &element);

/// Reflectivities [r_1..r_k] for a k-beamsplitter chain with r_i = r_{i-1} / (1 - r_{i-1}),
/// which gives every reflected port the same single-photon arrival probability `first`.
/// Throws InfeasibleUniformityError when first > 1/k.
std::vector<double> chain_reflectivities(double first, size_t k);

}  // namespace fockherald

#endif
