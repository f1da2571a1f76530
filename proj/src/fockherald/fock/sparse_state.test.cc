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

#include "fockherald/fock/sparse_state.h"

#include <gtest/gtest.h>

#include <cmath>

#include "fockherald/errors.h"

using namespace fockherald;

namespace {
const double kH = 1 / std::sqrt(2.0);
}

TEST(OccupationVector, basics) {
    OccupationVector v{1, 0, 2};
    ASSERT_EQ(v.mode_count(), 3);
    ASSERT_EQ(v.total(), 3);
    ASSERT_EQ(v.without(1), (OccupationVector{1, 2}));
    ASSERT_EQ(v.concat(OccupationVector{4}), (OccupationVector{1, 0, 2, 4}));
    ASSERT_EQ(v.str(), "|1,0,2>");
    ASSERT_THROW(v.at(3), DimensionError);
    ASSERT_LT((OccupationVector{0, 1}), (OccupationVector{1, 0}));
}

TEST(SparseState, tensor_basis_product) {
    auto s = tensor(SparseState::basis({1}), SparseState::basis({0}));
    ASSERT_EQ(s.mode_count(), 2);
    ASSERT_EQ(s.size(), 1);
    ASSERT_EQ(s.amplitude({1, 0}), Amplitude(1));
}

TEST(SparseState, tensor_distributes) {
    auto plus = SparseState::from_terms(1, {{{0}, kH}, {{1}, kH}});
    auto s = tensor(plus, SparseState::basis({1}));
    auto expected = SparseState::from_terms(2, {{{0, 1}, kH}, {{1, 1}, kH}});
    ASSERT_TRUE(s.approx_equals(expected, 1e-15));
}

TEST(SparseState, tensor_vacua) {
    auto s = tensor(SparseState::vacuum(1), SparseState::vacuum(1));
    ASSERT_EQ(s.mode_count(), 2);
    ASSERT_NEAR(s.norm_squared(), 1, 1e-15);
    ASSERT_EQ(s.amplitude({0, 0}), Amplitude(1));
}

TEST(SparseState, inner_product) {
    ASSERT_EQ(inner_product(SparseState::basis({1, 0}), SparseState::basis({1, 0})), Amplitude(1));
    ASSERT_EQ(inner_product(SparseState::basis({1, 0}), SparseState::basis({0, 1})), Amplitude(0));
    auto psi = SparseState::from_terms(2, {{{2, 0}, kH}, {{0, 2}, -kH}});
    ASSERT_NEAR(std::abs(inner_product(psi, psi) - Amplitude(1)), 0, 1e-15);
    ASSERT_THROW(inner_product(psi, SparseState::vacuum(3)), DimensionError);
}

TEST(SparseState, inner_product_conjugates_first_argument) {
    auto a = SparseState::basis({1}, Amplitude(0, 1));
    auto b = SparseState::basis({1});
    ASSERT_EQ(inner_product(a, b), Amplitude(0, -1));
    ASSERT_EQ(inner_product(b, a), Amplitude(0, 1));
}

TEST(SparseState, total_photon_number) {
    ASSERT_EQ(total_photon_number(SparseState::basis({1, 1})), (std::set<uint32_t>{2}));
    auto noon = SparseState::from_terms(2, {{{2, 0}, kH}, {{0, 2}, -kH}});
    ASSERT_EQ(total_photon_number(noon), (std::set<uint32_t>{2}));
    auto mixed = SparseState::from_terms(2, {{{0, 0}, kH}, {{1, 0}, kH}});
    ASSERT_EQ(total_photon_number(mixed), (std::set<uint32_t>{0, 1}));
}

TEST(SparseState, add_accumulates_and_prunes) {
    SparseState s(2);
    s.add({1, 0}, 0.5);
    s.add({1, 0}, 0.5);
    ASSERT_EQ(s.amplitude({1, 0}), Amplitude(1));
    s.add({0, 1}, 1e-16);
    s.prune();
    ASSERT_EQ(s.size(), 1);
    ASSERT_THROW(s.add({1}, 1), DimensionError);
}

TEST(SparseState, cancellation_removes_terms) {
    SparseState s(1);
    s.add({1}, 0.5);
    s.add({1}, -0.5);
    s.prune();
    ASSERT_TRUE(s.empty());
}

TEST(SparseState, normalization) {
    auto s = SparseState::from_terms(1, {{{0}, 3}, {{1}, 4}});
    ASSERT_FALSE(s.is_normalized());
    auto n = s.normalized();
    ASSERT_TRUE(n.is_normalized());
    ASSERT_NEAR(std::abs(n.amplitude({1})), 0.8, 1e-15);
    ASSERT_THROW(SparseState(2).normalized(), DomainError);
}

TEST(SparseState, zero_mode_state) {
    auto s = SparseState::vacuum(0);
    ASSERT_EQ(s.mode_count(), 0);
    ASSERT_NEAR(s.norm_squared(), 1, 0);
    auto t = tensor(s, SparseState::basis({3}));
    ASSERT_EQ(t.amplitude({3}), Amplitude(1));
}
