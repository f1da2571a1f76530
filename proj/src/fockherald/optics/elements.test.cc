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

#include "fockherald/optics/elements.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fockherald/errors.h"

using namespace fockherald;

namespace {

double branch_weight(const Ensemble &e, const OccupationVector &occ) {
    double w = 0;
    for (const auto &b : e.branches()) {
        w += b.weight * std::norm(b.state.amplitude(occ));
    }
    return w;
}

SparseState random_state(std::mt19937_64 &rng, size_t modes, uint32_t max_photons) {
    std::normal_distribution<double> g;
    std::uniform_int_distribution<uint32_t> count(0, max_photons);
    SparseState s(modes);
    for (int t = 0; t < 6; t++) {
        OccupationVector occ(modes);
        for (size_t m = 0; m < modes; m++) {
            occ[m] = count(rng);
        }
        s.add(occ, Amplitude(g(rng), g(rng)));
    }
    return s.normalized();
}

}  // namespace

TEST(BeamSplitter, single_photon) {
    double r = 0.3;
    auto out = apply_beamsplitter(SparseState::basis({1, 0}), {0, 1, r});
    ASSERT_NEAR(out.amplitude({1, 0}).real(), std::sqrt(r), 1e-15);
    ASSERT_NEAR(out.amplitude({0, 1}).real(), std::sqrt(1 - r), 1e-15);
}

TEST(BeamSplitter, hong_ou_mandel) {
    auto out = apply_beamsplitter(SparseState::basis({1, 1}), {0, 1, 0.5});
    auto expected = SparseState::from_terms(2, {{{2, 0}, 1 / std::sqrt(2.0)}, {{0, 2}, -1 / std::sqrt(2.0)}});
    ASSERT_TRUE(out.approx_equals(expected, 1e-14));
    ASSERT_EQ(out.amplitude({1, 1}), Amplitude(0));
}

TEST(BeamSplitter, full_reflection_is_a_sign) {
    for (uint32_t n = 0; n <= 3; n++) {
        for (uint32_t m = 0; m <= 3; m++) {
            auto out = apply_beamsplitter(SparseState::basis({n, m}), {0, 1, 1.0});
            ASSERT_EQ(out.size(), 1);
            ASSERT_NEAR(out.amplitude({n, m}).real(), m % 2 ? -1 : 1, 1e-15);
        }
    }
}

TEST(BeamSplitter, matches_creation_operator_expansion) {
    // a^dag^2 b^dag |0> / sqrt(2) with a -> sqrt(r) a + sqrt(t) b, b -> sqrt(t) a - sqrt(r) b.
    double r = 0.2;
    double t = 1 - r;
    double sr = std::sqrt(r);
    double st = std::sqrt(t);
    // (sr a + st b)^2 (st a - sr b) expanded into monomials a^i b^j.
    double c30 = sr * sr * st;
    double c21 = -sr * sr * sr + 2 * sr * st * st;
    double c12 = -2 * sr * sr * st + st * st * st;
    double c03 = -st * st * sr;
    auto fact = [](int k) {
        return std::tgamma(k + 1.0);
    };
    double norm = 1 / std::sqrt(fact(2));
    auto out = apply_beamsplitter(SparseState::basis({2, 1}), {0, 1, r});
    ASSERT_NEAR(out.amplitude({3, 0}).real(), norm * c30 * std::sqrt(fact(3)), 1e-14);
    ASSERT_NEAR(out.amplitude({2, 1}).real(), norm * c21 * std::sqrt(fact(2)), 1e-14);
    ASSERT_NEAR(out.amplitude({1, 2}).real(), norm * c12 * std::sqrt(fact(2)), 1e-14);
    ASSERT_NEAR(out.amplitude({0, 3}).real(), norm * c03 * std::sqrt(fact(3)), 1e-14);
}

TEST(BeamSplitter, unitary_and_self_inverse) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < 20; trial++) {
        auto s = random_state(rng, 3, 3);
        BeamSplitter bs{size_t(trial % 3), size_t((trial + 1) % 3), unit(rng)};
        auto once = apply_beamsplitter(s, bs);
        ASSERT_NEAR(once.norm_squared(), 1, 1e-12);
        ASSERT_EQ(total_photon_number(once), total_photon_number(s));
        ASSERT_TRUE(apply_beamsplitter(once, bs).approx_equals(s, 1e-12));
    }
}

TEST(BeamSplitter, rejects_bad_parameters) {
    auto s = SparseState::basis({1, 0});
    ASSERT_THROW(apply_beamsplitter(s, {0, 0, 0.5}), ValidationError);
    ASSERT_THROW(apply_beamsplitter(s, {0, 2, 0.5}), DimensionError);
    ASSERT_THROW(apply_beamsplitter(s, {0, 1, 1.5}), ValidationError);
}

TEST(LossChannel, binomial_branches) {
    auto out = apply_loss(Ensemble::pure(SparseState::basis({2})), {0, 0.8});
    ASSERT_EQ(out.branches().size(), 3);
    ASSERT_NEAR(branch_weight(out, {2}), 0.64, 1e-15);
    ASSERT_NEAR(branch_weight(out, {1}), 0.32, 1e-15);
    ASSERT_NEAR(branch_weight(out, {0}), 0.04, 1e-15);
}

TEST(LossChannel, lossless_and_total_loss) {
    auto s = SparseState::from_terms(2, {{{1, 1}, 0.6}, {{2, 0}, 0.8}});
    auto same = apply_loss(Ensemble::pure(s), {0, 1.0});
    ASSERT_EQ(same.branches().size(), 1);
    ASSERT_NEAR(same.branches()[0].weight, 1, 1e-15);
    ASSERT_TRUE(same.branches()[0].state.approx_equals(s, 1e-15));

    auto gone = apply_loss(Ensemble::pure(SparseState::basis({1})), {0, 0.0});
    ASSERT_EQ(gone.branches().size(), 1);
    ASSERT_NEAR(gone.branches()[0].weight, 1, 1e-15);
    ASSERT_EQ(gone.branches()[0].state.amplitude({0}), Amplitude(1));
}

TEST(LossChannel, preserves_trace) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; trial++) {
        auto e = apply_loss(Ensemble::pure(random_state(rng, 2, 4)), {1, 0.37});
        ASSERT_NEAR(e.total_weight(), 1, 1e-12);
    }
}

TEST(ChainReflectivities, recursion) {
    auto a = chain_reflectivities(1.0 / 3, 3);
    ASSERT_NEAR(a[0], 1.0 / 3, 1e-15);
    ASSERT_NEAR(a[1], 0.5, 1e-15);
    ASSERT_NEAR(a[2], 1.0, 1e-15);
    auto b = chain_reflectivities(0.1, 3);
    ASSERT_NEAR(b[1], 1.0 / 9, 1e-15);
    ASSERT_NEAR(b[2], 0.125, 1e-15);
    ASSERT_EQ(chain_reflectivities(0.42, 1), std::vector<double>{0.42});
}

TEST(ChainReflectivities, errors) {
    ASSERT_THROW(chain_reflectivities(0.1, 0), DomainError);
    ASSERT_THROW(chain_reflectivities(0.0, 2), DomainError);
    ASSERT_THROW(chain_reflectivities(1.2, 2), DomainError);
    ASSERT_THROW(chain_reflectivities(0.4, 3), InfeasibleUniformityError);
}
