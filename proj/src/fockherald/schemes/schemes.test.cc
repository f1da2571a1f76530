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

#include "fockherald/schemes/schemes.h"

#include <gtest/gtest.h>

#include <numeric>

#include "fockherald/analytic/formulas.h"
#include "fockherald/errors.h"
#include "fockherald/oracle/oracle.h"

using namespace fockherald;
using namespace fockherald::schemes;

namespace {

size_t beamsplitter_count(const Circuit &c) {
    return c.elements.size();
}

double sum(const std::vector<double> &v) {
    return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

TEST(Tree, structure_and_uniform_arrival) {
    for (size_t ports : {2, 4, 8, 16}) {
        auto tree = build_tree_nport(ports);
        ASSERT_EQ(beamsplitter_count(tree), ports - 1);
        ASSERT_EQ(tree.detectors.size(), ports);
        auto arrival = oracle::arrival_model_for(tree);
        for (double p : arrival.arrival_probs) {
            ASSERT_NEAR(p, 1.0 / ports, 1e-15);
        }
    }
    ASSERT_THROW(build_tree_nport(6), ValidationError);
    ASSERT_THROW(build_tree_nport(1), ValidationError);
}

TEST(Tree, single_photon_simulation_arrivals) {
    auto tree = build_tree_nport(4);
    auto patterns = click_pattern_distribution(run_elements(tree, Ensemble::pure(fock_input(4, 0, 1))), tree.detectors);
    ASSERT_EQ(patterns.size(), 4);
    for (const auto &[pattern, p] : patterns) {
        ASSERT_NEAR(p, 0.25, 1e-15);
    }
}

TEST(Cascade, examples) {
    ASSERT_NEAR(simulate_cascade(1, {2, 1.0})[1], 1, 1e-15);
    auto d = simulate_cascade(2, {8, 1.0});
    ASSERT_NEAR(d[2], 0.875, 1e-14);
    ASSERT_NEAR(d[1], 0.125, 1e-14);
    ASSERT_NEAR(simulate_cascade(2, {8, 0.9})[2], 0.70875, 1e-14);
}

TEST(Cascade, distribution_sums_to_one_at_unit_efficiency) {
    for (size_t ports : {2, 4, 8}) {
        for (uint32_t n = 0; n <= 4; n++) {
            auto d = simulate_cascade(n, {ports, 1.0});
            ASSERT_EQ(d.size(), std::min<size_t>(n, ports) + 1);
            ASSERT_NEAR(sum(d), 1, 1e-12);
            if (n <= ports) {
                ASSERT_NEAR(d[n], analytic::cascade_prob_correct(n, ports, 1.0), 1e-12);
            }
        }
    }
}

TEST(Tdm, examples) {
    auto one = simulate_tdm(1, {0.5, 1.0, 2, 1.0, {}});
    ASSERT_NEAR(one.distribution[1], 0.75, 1e-14);
    ASSERT_NEAR(one.distribution[0], 0.25, 1e-14);
    ASSERT_NEAR(one.remainder_probability, 0.25, 1e-14);

    auto immediate = simulate_tdm(1, {1.0, 1.0, 1, 1.0, {}});
    ASSERT_NEAR(immediate.distribution[1], 1, 1e-15);

    // Each photon lands in bin 1 w.p. 1/2, bin 2 w.p. 1/4, stays in the loop w.p. 1/4.
    auto two = simulate_tdm(2, {0.5, 1.0, 2, 1.0, {}});
    ASSERT_NEAR(two.distribution[2], 0.25, 1e-14);
    ASSERT_NEAR(two.distribution[1], 0.6875, 1e-14);
    ASSERT_NEAR(two.distribution[0], 0.0625, 1e-14);
    ASSERT_NEAR(two.remainder_probability, 0.4375, 1e-14);
}

TEST(Tdm, loop_loss_and_efficiency) {
    auto d = simulate_tdm(1, {0.5, 0.8, 3, 0.9, {}});
    double arrive = 0.5 + 0.5 * 0.8 * 0.5 + 0.5 * 0.8 * 0.5 * 0.8 * 0.5;
    ASSERT_NEAR(d.distribution[1], 0.9 * arrive, 1e-14);
}

TEST(Tdm, uniform_schedule_reproduces_cascade) {
    for (size_t bins : {2, 4, 8}) {
        TdmConfig cfg{0.0, 1.0, bins, 0.9, uniform_tdm_schedule(bins)};
        for (uint32_t n = 0; n <= 3; n++) {
            auto tdm = simulate_tdm(n, cfg);
            auto cascade = simulate_cascade(n, {bins, 0.9});
            ASSERT_NEAR(tdm.remainder_probability, 0, 1e-12);
            for (size_t m = 0; m < cascade.size(); m++) {
                ASSERT_NEAR(tdm.distribution[m], cascade[m], 1e-12) << bins << " " << n << " " << m;
            }
        }
    }
}

TEST(Tdm, long_loop_sums_to_one) {
    auto d = simulate_tdm(2, {0.5, 1.0, 40, 1.0, {}});
    ASSERT_NEAR(sum(d.distribution), 1, 1e-12);
}

TEST(Chain, structure) {
    auto k1 = build_chain_detector({1, 0.2, 0.9});
    ASSERT_EQ(k1.elements.size(), 1);
    ASSERT_EQ(k1.detectors.size(), 2);
    ASSERT_TRUE(std::holds_alternative<Click>(k1.detectors[0].condition));
    ASSERT_TRUE(std::holds_alternative<NoClick>(k1.detectors[1].condition));

    auto k2 = build_chain_detector({2, 0.1, 1.0});
    ASSERT_NEAR(std::get<BeamSplitter>(k2.elements[1]).reflectivity, 1.0 / 9, 1e-15);

    auto k3 = build_chain_detector({3, 1.0 / 3, 1.0});
    ASSERT_NEAR(std::get<BeamSplitter>(k3.elements[2]).reflectivity, 1, 1e-15);
    ASSERT_NEAR(oracle::arrival_model_for(k3).arrival_probs[3], 0, 1e-15);

    ASSERT_THROW(build_chain_detector({3, 0.4, 1.0}), InfeasibleUniformityError);
}

TEST(Chain, examples) {
    ASSERT_NEAR(simulate_chain(1, {1, 0.1, 0.9}), 0.09, 1e-15);
    ASSERT_NEAR(simulate_chain(2, {1, 0.1, 0.9}), 0.0261, 1e-15);
    ASSERT_NEAR(simulate_chain(2, {2, 0.1, 1.0}), 0.02, 1e-15);
}

TEST(Suppression, grid) {
    auto rows = suppression_grid({0.9, 1.0}, {0.1, 0.3}, 3);
    ASSERT_EQ(rows.size(), 2 * 2 * 4);
    for (const auto &row : rows) {
        if (row.n == 0) {
            ASSERT_EQ(row.p_m1, 0);
        }
        if (row.efficiency == 1.0 && row.n == 1) {
            ASSERT_NEAR(row.p_m1, row.reflectivity, 1e-15);
        }
        if (row.efficiency == 0.9 && row.reflectivity == 0.1 && row.n == 2) {
            ASSERT_NEAR(row.p_m1, 0.0261, 1e-15);
        }
        ASSERT_NEAR(row.p_m1, analytic::chain_prob_m1(row.n, row.reflectivity, row.efficiency), 1e-12);
    }
    ASSERT_THROW(suppression_grid({}, {0.1}, 3), ValidationError);
}
