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

#include <algorithm>

#include "fockherald/analytic/formulas.h"
#include "fockherald/errors.h"

using namespace fockherald;
using namespace fockherald::schemes;

namespace {

void add_tree(Circuit &circuit, size_t first, size_t width) {
    if (width < 2) {
        return;
    }
    size_t half = width / 2;
    circuit.elements.push_back(BeamSplitter{first, first + half, 0.5});
    add_tree(circuit, first, half);
    add_tree(circuit, first + half, half);
}

}  // namespace

double TdmConfig::coupling_at(size_t round_trip) const {
    if (coupling_schedule.empty()) {
        return coupling;
    }
    return coupling_schedule.at(round_trip);
}

Circuit schemes::build_tree_nport(size_t ports, double efficiency) {
    if (ports < 2 || (ports & (ports - 1)) != 0) {
        throw ValidationError("tree N-port needs a power-of-two port count >= 2, got " + std::to_string(ports));
    }
    Circuit circuit;
    circuit.mode_count = ports;
    add_tree(circuit, 0, ports);
    for (size_t m = 0; m < ports; m++) {
        circuit.detectors.push_back({m, efficiency, Click{}});
    }
    circuit.validate();
    return circuit;
}

std::vector<double> schemes::simulate_cascade(uint32_t n, const CascadeConfig &cfg) {
    Circuit circuit = build_tree_nport(cfg.ports, cfg.efficiency);
    Ensemble out = run_elements(circuit, Ensemble::pure(fock_input(circuit.mode_count, 0, n)));
    auto counts = click_count_distribution(click_pattern_distribution(out, circuit.detectors), cfg.ports);
    counts.resize(std::min<size_t>(n, cfg.ports) + 1);
    return counts;
}

Circuit schemes::build_tdm_unrolled(const TdmConfig &cfg) {
    if (cfg.round_trips == 0) {
        throw ValidationError("TDM needs at least one round trip");
    }
    if (!cfg.coupling_schedule.empty() && cfg.coupling_schedule.size() != cfg.round_trips) {
        throw ValidationError("coupling schedule length must equal round_trips");
    }
    Circuit circuit;
    circuit.mode_count = cfg.round_trips + 1;
    for (size_t r = 0; r < cfg.round_trips; r++) {
        // The loop photon stays in mode 0 with probability 1 - coupling.
        circuit.elements.push_back(BeamSplitter{0, r + 1, 1 - cfg.coupling_at(r)});
        circuit.elements.push_back(LossChannel{0, cfg.loop_transmission});
        circuit.detectors.push_back({r + 1, cfg.efficiency, Click{}});
    }
    circuit.validate();
    return circuit;
}

TdmResult schemes::simulate_tdm(uint32_t n, const TdmConfig &cfg) {
    Circuit circuit = build_tdm_unrolled(cfg);
    Ensemble out = run_elements(circuit, Ensemble::pure(fock_input(circuit.mode_count, 0, n)));

    TdmResult result;
    result.remainder_probability = 1 - heralding_probability(measure(out, {0, 1.0, NoClick{}}));

    Ensemble bins = trace_out(out, 0);
    std::vector<DetectorSpec> detectors;
    for (size_t r = 0; r < cfg.round_trips; r++) {
        detectors.push_back({r, cfg.efficiency, Click{}});
    }
    result.distribution = click_count_distribution(click_pattern_distribution(bins, detectors), cfg.round_trips);
    return result;
}

std::vector<double> schemes::uniform_tdm_schedule(size_t round_trips) {
    if (round_trips == 0) {
        throw ValidationError("TDM needs at least one round trip");
    }
    return chain_reflectivities(1.0 / static_cast<double>(round_trips), round_trips);
}

Circuit schemes::build_chain_detector(const ChainConfig &cfg) {
    auto reflectivities = chain_reflectivities(cfg.first_reflectivity, cfg.k);
    Circuit circuit;
    circuit.mode_count = cfg.k + 1;
    for (size_t i = 0; i < cfg.k; i++) {
        circuit.elements.push_back(BeamSplitter{i, i + 1, reflectivities[i]});
        circuit.detectors.push_back({i, cfg.efficiency, Click{}});
    }
    circuit.detectors.push_back({cfg.k, cfg.efficiency, NoClick{}});
    circuit.validate();
    return circuit;
}

double schemes::simulate_chain(uint32_t n, const ChainConfig &cfg) {
    Circuit circuit = build_chain_detector(cfg);
    return heralding_probability(run(circuit, fock_input(circuit.mode_count, 0, n)));
}

std::vector<SuppressionRow> schemes::suppression_grid(
    const std::vector<double> &efficiencies, const std::vector<double> &reflectivities, uint32_t n_max) {
    if (efficiencies.empty() || reflectivities.empty()) {
        throw ValidationError("suppression grid needs non-empty efficiency and reflectivity lists");
    }
    std::vector<SuppressionRow> rows;
    for (double eff : efficiencies) {
        for (double ref : reflectivities) {
            for (uint32_t n = 0; n <= n_max; n++) {
                rows.push_back({eff, ref, n, analytic::chain_prob_m1(n, ref, eff)});
            }
        }
    }
    return rows;
}
