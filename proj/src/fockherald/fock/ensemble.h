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

#ifndef FOCKHERALD_FOCK_ENSEMBLE_H
#define FOCKHERALD_FOCK_ENSEMBLE_H

#include <vector>

#include "fockherald/fock/sparse_state.h"

namespace fockherald {

/// One pure component of a mixed state. `weight` is a joint heralding probability.
struct Branch {
    double weight;
    SparseState state;
};

/// A sub-normalized mixture rho = sum_b w_b |phi_b><phi_b| of normalized pure states.
class Ensemble {
   public:
    explicit Ensemble(size_t mode_count) : mode_count_(mode_count) {
    }
    /// Weight-1 ensemble holding `state` (normalized on the way in).
    static Ensemble pure(const SparseState &state);

    size_t mode_count() const {
        return mode_count_;
    }
    const std::vector<Branch> &branches() const {
        return branches_;
    }
    bool empty() const {
        return branches_.empty();
    }

    /// Appends a branch; the state is normalized, its norm folded into the weight.
    /// Zero states and non-positive weights are ignored.
    void add(double weight, const SparseState &state);

    double total_weight() const;

   private:
    size_t mode_count_;
    std::vector<Branch> branches_;
};

}  // namespace fockherald

#endif
