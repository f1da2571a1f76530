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

#include "fockherald/analytic/formulas.h"

#include <gtest/gtest.h>

#include "fockherald/errors.h"

using namespace fockherald;
using namespace fockherald::analytic;

TEST(CascadeProbCorrect, examples) {
    for (uint64_t ports : {1, 2, 8, 1000}) {
        ASSERT_EQ(cascade_prob_correct(1, ports, 1.0), 1);
    }
    ASSERT_NEAR(cascade_prob_correct(2, 8, 1.0), 0.875, 1e-15);
    ASSERT_NEAR(cascade_prob_correct(2, 8, 0.9), 0.70875, 1e-15);
    ASSERT_EQ(cascade_prob_correct(0, 4, 0.5), 1);
    ASSERT_THROW(cascade_prob_correct(3, 2, 1.0), DomainError);
}

TEST(CascadeProbCorrect, two_photon_limit) {
    double prev = 0;
    for (uint64_t ports : {2, 10, 100, 1000, 10000}) {
        double p = cascade_prob_correct(2, ports, 1.0);
        ASSERT_EQ(p, 1.0 - 1.0 / ports);
        ASSERT_GT(p, prev);
        prev = p;
    }
}

TEST(ChainProbM1, examples) {
    ASSERT_NEAR(chain_prob_m1(1, 0.3, 0.7), 0.21, 1e-15);
    ASSERT_NEAR(chain_prob_m1(2, 0.1, 0.9), 0.0261, 1e-15);
    ASSERT_EQ(chain_prob_m1(0, 0.4, 0.9), 0);
    ASSERT_EQ(chain_prob_m1_closed_form(0, 0.4, 0.9), 0);
    ASSERT_THROW(chain_prob_m1_closed_form(2, 0.1, 1.0), DomainError);
    ASSERT_NEAR(chain_prob_m1(3, 0.1, 1.0), 0.1 * 0.1 * 0.1, 1e-15);
}

TEST(ChainProbM1, closed_form_matches_sum) {
    for (uint32_t n = 0; n <= 12; n++) {
        for (double ref : {0.011, 0.1, 0.5, 1.0}) {
            for (double eff : {0.5, 0.9, 0.99, 0.999999}) {
                ASSERT_NEAR(chain_prob_m1_closed_form(n, ref, eff), chain_prob_m1_binomial_sum(n, ref, eff), 1e-13);
            }
        }
    }
}

TEST(ChainProbMk, examples) {
    for (uint32_t n = 0; n <= 6; n++) {
        ASSERT_NEAR(chain_prob_mk(n, 1, 0.2, 0.9), chain_prob_m1(n, 0.2, 0.9), 1e-15);
    }
    ASSERT_NEAR(chain_prob_mk(2, 2, 0.1, 1.0), 0.02, 1e-15);
    ASSERT_EQ(chain_prob_mk(1, 2, 0.3, 0.9), 0);
    ASSERT_THROW(chain_prob_mk(3, 3, 0.5, 1.0), InfeasibleUniformityError);
}

TEST(ChainProbMk, all_reflected_photons_fill_every_detector) {
    // With k * ref = 1 nothing reaches the terminal detector, so acceptance is the
    // probability that n uniformly distributed photons hit all k detectors.
    ASSERT_NEAR(chain_prob_mk(3, 3, 1.0 / 3, 1.0), 6.0 / 27, 1e-14);
    ASSERT_NEAR(chain_prob_mk(4, 2, 0.5, 1.0), 14.0 / 16, 1e-14);
}
