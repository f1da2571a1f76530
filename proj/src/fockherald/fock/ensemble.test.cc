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

#include <gtest/gtest.h>

using namespace fockherald;

TEST(Ensemble, pure_state_has_unit_weight) {
    auto e = Ensemble::pure(SparseState::basis({1, 0}));
    ASSERT_EQ(e.branches().size(), 1);
    ASSERT_EQ(e.total_weight(), 1);
}

TEST(Ensemble, add_folds_norm_into_weight) {
    Ensemble e(1);
    e.add(0.5, SparseState::basis({1}, 0.5));
    ASSERT_EQ(e.branches().size(), 1);
    ASSERT_NEAR(e.branches()[0].weight, 0.125, 1e-15);
    ASSERT_TRUE(e.branches()[0].state.is_normalized());
}

TEST(Ensemble, add_skips_zero_states_and_weights) {
    Ensemble e(1);
    e.add(1, SparseState(1));
    e.add(0, SparseState::basis({1}));
    ASSERT_TRUE(e.empty());
    ASSERT_EQ(e.total_weight(), 0);
}
