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

#include "fockherald/optics/circuit.h"

#include <gtest/gtest.h>

#include "fockherald/errors.h"

using namespace fockherald;

namespace {

Circuit two_mode_splitter() {
    Circuit c;
    c.mode_count = 3;
    c.elements = {BeamSplitter{0, 1, 0.25}, LossChannel{1, 0.5}};
    c.detectors = {{1, 0.9, Click{}}, {2, 0.8, ExactCount{0}}};
    return c;
}

}  // namespace

TEST(Circuit, validate) {
    auto c = two_mode_splitter();
    ASSERT_NO_THROW(c.validate());
    ASSERT_EQ(c.unmeasured_modes(), std::vector<size_t>{0});

    auto bad = c;
    bad.detectors.push_back({1, 1.0, NoClick{}});
    ASSERT_THROW(bad.validate(), ValidationError);
    bad = c;
    bad.detectors[0].mode = 7;
    ASSERT_THROW(bad.validate(), DimensionError);
    bad = c;
    bad.detectors[0].efficiency = -0.1;
    ASSERT_THROW(bad.validate(), ValidationError);
    bad = c;
    bad.elements.push_back(BeamSplitter{0, 3, 0.5});
    ASSERT_THROW(bad.validate(), DimensionError);
    ASSERT_THROW(Circuit{}.validate(), ValidationError);
}

TEST(Circuit, run_single_photon) {
    auto c = two_mode_splitter();
    auto out = run(c, fock_input(3, 0, 1));
    // Photon leaves mode 0 with 0.75, survives loss 0.5, is detected 0.9.
    ASSERT_NEAR(heralding_probability(out), 0.75 * 0.5 * 0.9, 1e-15);
    ASSERT_EQ(out.mode_count(), 1);
    ASSERT_THROW(run(c, fock_input(2, 0, 1)), DimensionError);
}

TEST(Circuit, fully_measured_circuit) {
    Circuit c;
    c.mode_count = 2;
    c.elements = {BeamSplitter{0, 1, 0.5}};
    c.detectors = {{0, 1.0, Click{}}, {1, 1.0, NoClick{}}};
    auto out = run(c, fock_input(2, 0, 1));
    ASSERT_EQ(out.mode_count(), 0);
    ASSERT_NEAR(heralding_probability(out), 0.5, 1e-15);
}

TEST(Circuit, json_round_trip) {
    auto c = two_mode_splitter();
    auto j = circuit_to_json(c);
    ASSERT_EQ(circuit_from_json(j), c);
    ASSERT_EQ(circuit_from_json(nlohmann::json::parse(j.dump())), c);
    ASSERT_EQ(j["elements"][0]["type"], "beamsplitter");
    ASSERT_EQ(j["detectors"][1]["condition"], "exact_count");
}

TEST(Circuit, json_schema_errors) {
    auto j = circuit_to_json(two_mode_splitter());
    auto bad = j;
    bad["elements"][0]["type"] = "mirror";
    ASSERT_THROW(circuit_from_json(bad), ValidationError);
    bad = j;
    bad["detectors"][0]["condition"] = "maybe";
    ASSERT_THROW(circuit_from_json(bad), ValidationError);
    bad = j;
    bad.erase("mode_count");
    ASSERT_THROW(circuit_from_json(bad), ValidationError);
}
