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

#include "fockherald/fock/ensemble.h"

#include "fockherald/errors.h"

using namespace fockherald;

Ensemble Ensemble::pure(const SparseState &state) {
    Ensemble e(state.mode_count());
    e.branches_.push_back({1.0, state.normalized()});
    return e;
}

void Ensemble::add(double weight, const SparseState &state) {
    if (state.mode_count() != mode_count_) {
        throw DimensionError("branch mode count does not match ensemble");
    }
    double n2 = state.norm_squared();
    if (weight <= 0 || n2 <= 0) {
        return;
    }
    branches_.push_back({weight * n2, state.normalized()});
}

double Ensemble::total_weight() const {
    double total = 0;
    for (const auto &b : branches_) {
        total += b.weight;
    }
    return total;
}
