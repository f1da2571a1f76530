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

#include "fockherald/cnot/cnot.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fockherald/cnot/channel.h"
#include "fockherald/errors.h"

using namespace fockherald;
using namespace fockherald::cnot;

namespace {

TwoQubitState random_input(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    TwoQubitState psi;
    for (auto &a : psi) {
        a = {g(rng), g(rng)};
    }
    return normalized(psi);
}

TwoQubitState basis(size_t index) {
    TwoQubitState psi{};
    psi[index] = 1;
    return psi;
}

}  // namespace

TEST(CnotConfig, default_is_calibrated) {
    auto report = calibrate(default_cnot_config());
    ASSERT_TRUE(report.passed) << report.diagnostics();
    ASSERT_GT(report.herald_probability, 0.04);
    ASSERT_LT(report.herald_probability, 0.08);
    ASSERT_LT(report.herald_spread, 1e-9);
    ASSERT_EQ(report.entries.size(), 5);
    ASSERT_NO_THROW(require_calibrated(default_cnot_config()));
}

TEST(CnotConfig, perturbed_reflectivity_fails) {
    auto cfg = default_cnot_config();
    cfg.beamsplitters[2].reflectivity += 0.05;
    auto report = calibrate(cfg);
    ASSERT_FALSE(report.passed);
    double worst = 1;
    for (const auto &e : report.entries) {
        worst = std::min(worst, e.fidelity);
    }
    ASSERT_LT(worst, 1 - 1e-6);
    ASSERT_THROW(require_calibrated(cfg), ValidationError);
}

TEST(CnotConfig, identity_config_fails) {
    auto cfg = default_cnot_config();
    for (auto &bs : cfg.beamsplitters) {
        bs.reflectivity = 1;
    }
    ASSERT_FALSE(calibrate(cfg).passed);
}

TEST(CnotConfig, validation) {
    auto cfg = default_cnot_config();
    cfg.control.mode_v = cfg.target.mode_h;
    ASSERT_ANY_THROW(cfg.validate());
    cfg = default_cnot_config();
    cfg.beamsplitters.push_back({0, 9, 0.5});
    ASSERT_THROW(cfg.validate(), DimensionError);
}

TEST(CnotConfig, json_round_trip) {
    auto cfg = default_cnot_config().with_model(ChainDetector{0.011, 0.99});
    auto j = config_to_json(cfg);
    ASSERT_EQ(config_from_json(nlohmann::json::parse(j.dump())), cfg);
    auto bad = j;
    bad["detector_model"]["type"] = "bolometer";
    ASSERT_THROW(config_from_json(bad), ValidationError);
}

TEST(CnotConfig, shipped_config_matches_default) {
    auto cfg = load_config(std::string(FOCKHERALD_CONFIG_DIR) + "/simplified_klm_cnot.json");
    ASSERT_EQ(cfg, default_cnot_config());
    ASSERT_THROW(load_config("/nonexistent/config.json"), ValidationError);
}

TEST(Cnot, truth_table_with_ideal_detectors) {
    auto cfg = default_cnot_config();
    for (size_t i = 0; i < 4; i++) {
        auto result = apply_gate(cfg, basis(i));
        ASSERT_EQ(result.output.branches().size(), 1);
        auto fp = fidelity_and_probability(result.output, encode_output(cfg, apply_ideal_cnot(basis(i))));
        ASSERT_NEAR(fp.fidelity, 1, 1e-9);
        ASSERT_NEAR(fp.probability, result.herald_probability, 1e-15);
        ASSERT_NEAR(result.herald_probability, 0.0513207882808456, 1e-9);
    }
}

TEST(Cnot, ideal_cnot_flips_target_when_control_set) {
    ASSERT_EQ(apply_ideal_cnot(basis(2)), basis(3));
    ASSERT_EQ(apply_ideal_cnot(basis(3)), basis(2));
    ASSERT_EQ(apply_ideal_cnot(basis(0)), basis(0));
    ASSERT_EQ(apply_ideal_cnot(basis(1)), basis(1));
}

TEST(Cnot, fidelity_and_probability) {
    auto ideal = SparseState::basis({1, 0});
    Ensemble pure(2);
    pure.add(0.05, ideal);
    auto a = fidelity_and_probability(pure, ideal);
    ASSERT_NEAR(a.fidelity, 1, 1e-15);
    ASSERT_NEAR(a.probability, 0.05, 1e-15);

    Ensemble mixed(2);
    mixed.add(0.02, ideal);
    mixed.add(0.02, SparseState::basis({0, 1}));
    auto b = fidelity_and_probability(mixed, ideal);
    ASSERT_NEAR(b.fidelity, 0.5, 1e-15);
    ASSERT_NEAR(b.probability, 0.04, 1e-15);

    ASSERT_THROW(fidelity_and_probability(Ensemble(2), ideal), UndefinedFidelityError);
}

TEST(HeraldedChannel, matches_full_simulation) {
    std::mt19937_64 rng(3);
    std::vector<DetectorModel> models{
        IdealNumberResolving{},
        NonDiscriminating{0.9},
        ChainDetector{0.2, 0.95},
    };
    for (const auto &model : models) {
        auto cfg = default_cnot_config().with_model(model);
        HeraldedChannel channel(cfg);
        for (int trial = 0; trial < 4; trial++) {
            auto psi = random_input(rng);
            auto result = apply_gate(cfg, psi);
            auto expected = fidelity_and_probability(result.output, encode_output(cfg, apply_ideal_cnot(psi)));
            auto got = channel.evaluate(psi);
            ASSERT_NEAR(got.fidelity, expected.fidelity, 1e-10) << detector_model_name(model);
            ASSERT_NEAR(got.probability, expected.probability, 1e-12) << detector_model_name(model);
        }
    }
}

TEST(HeraldedChannel, min_probability_bounds_inputs) {
    auto cfg = default_cnot_config().with_model(ChainDetector{0.011, 0.99});
    HeraldedChannel channel(cfg);
    std::mt19937_64 rng(5);
    double p_min = channel.min_probability();
    for (int trial = 0; trial < 50; trial++) {
        ASSERT_GE(channel.probability(random_input(rng)), p_min - 1e-18);
    }
    ASSERT_TRUE(channel.herald_operator().isApprox(channel.herald_operator().adjoint()));
}

TEST(HeraldedChannel, nondiscriminating_equals_unit_reflectivity_chain) {
    std::mt19937_64 rng(9);
    for (double eff : {0.8, 0.95, 1.0}) {
        HeraldedChannel nd(default_cnot_config().with_model(NonDiscriminating{eff}));
        HeraldedChannel chain(default_cnot_config().with_model(ChainDetector{1.0, eff}));
        for (int trial = 0; trial < 5; trial++) {
            auto psi = random_input(rng);
            ASSERT_NEAR(nd.evaluate(psi).fidelity, chain.evaluate(psi).fidelity, 1e-12);
            ASSERT_NEAR(nd.evaluate(psi).probability, chain.evaluate(psi).probability, 1e-15);
        }
    }
}

TEST(HeraldedChannel, weak_reflector_recovers_basis_fidelity) {
    double prev = 0;
    for (double ref : {0.1, 0.01, 0.001, 1e-5}) {
        HeraldedChannel channel(default_cnot_config().with_model(ChainDetector{ref, 1.0}));
        double worst = 1;
        for (size_t i = 0; i < 4; i++) {
            worst = std::min(worst, channel.evaluate(basis(i)).fidelity);
        }
        ASSERT_GT(worst, prev);
        prev = worst;
    }
    ASSERT_GT(prev, 0.9999);
}
