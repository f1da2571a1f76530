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

#include <set>

#include "fockherald/errors.h"

using namespace fockherald;

void Circuit::validate() const {
    if (mode_count == 0) {
        throw ValidationError("circuit has no modes");
    }
    for (const auto &element : elements) {
        validate_element(element, mode_count);
    }
    std::set<size_t> seen;
    for (const auto &d : detectors) {
        if (d.mode >= mode_count) {
            throw DimensionError("detector mode " + std::to_string(d.mode) + " out of range");
        }
        if (!seen.insert(d.mode).second) {
            throw ValidationError("two detectors on mode " + std::to_string(d.mode));
        }
        if (!(d.efficiency >= 0 && d.efficiency <= 1)) {
            throw ValidationError("detector efficiency must lie in [0,1]");
        }
    }
}

std::vector<size_t> Circuit::unmeasured_modes() const {
    std::set<size_t> measured;
    for (const auto &d : detectors) {
        measured.insert(d.mode);
    }
    std::vector<size_t> out;
    for (size_t m = 0; m < mode_count; m++) {
        if (!measured.contains(m)) {
            out.push_back(m);
        }
    }
    return out;
}

Ensemble fockherald::run_elements(const Circuit &circuit, const Ensemble &input) {
    if (input.mode_count() != circuit.mode_count) {
        throw DimensionError("input mode count does not match circuit");
    }
    Ensemble current = input;
    for (const auto &element : circuit.elements) {
        current = apply_element(current, element);
    }
    return current;
}

Ensemble fockherald::run(const Circuit &circuit, const SparseState &input) {
    circuit.validate();
    return measure_all(run_elements(circuit, Ensemble::pure(input)), circuit.detectors);
}

SparseState fockherald::fock_input(size_t mode_count, size_t mode, uint32_t photons) {
    if (mode >= mode_count) {
        throw DimensionError("input mode out of range");
    }
    OccupationVector occ(mode_count);
    occ[mode] = photons;
    return SparseState::basis(occ);
}

nlohmann::json fockherald::detector_to_json(const DetectorSpec &spec) {
    nlohmann::json j{{"mode", spec.mode}, {"efficiency", spec.efficiency}};
    if (std::holds_alternative<NoClick>(spec.condition)) {
        j["condition"] = "no_click";
    } else if (std::holds_alternative<Click>(spec.condition)) {
        j["condition"] = "click";
    } else {
        j["condition"] = "exact_count";
        j["count"] = std::get<ExactCount>(spec.condition).count;
    }
    return j;
}

DetectorSpec fockherald::detector_from_json(const nlohmann::json &j) {
    try {
        DetectorSpec spec{j.at("mode").get<size_t>(), j.value("efficiency", 1.0), NoClick{}};
        auto tag = j.at("condition").get<std::string>();
        if (tag == "no_click") {
            spec.condition = NoClick{};
        } else if (tag == "click") {
            spec.condition = Click{};
        } else if (tag == "exact_count") {
            spec.condition = ExactCount{j.at("count").get<uint32_t>()};
        } else {
            throw ValidationError("unknown detector condition '" + tag + "'");
        }
        return spec;
    } catch (const nlohmann::json::exception &ex) {
        throw ValidationError(std::string("bad detector JSON: ") + ex.what());
    }
}

nlohmann::json fockherald::circuit_to_json(const Circuit &circuit) {
    nlohmann::json elements = nlohmann::json::array();
    for (const auto &element : circuit.elements) {
        if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
            elements.push_back(
                {{"type", "beamsplitter"}, {"mode_a", bs->mode_a}, {"mode_b", bs->mode_b}, {"reflectivity", bs->reflectivity}});
        } else {
            const auto &loss = std::get<LossChannel>(element);
            elements.push_back({{"type", "loss"}, {"mode", loss.mode}, {"transmission", loss.transmission}});
        }
    }
    nlohmann::json detectors = nlohmann::json::array();
    for (const auto &d : circuit.detectors) {
        detectors.push_back(detector_to_json(d));
    }
    return {{"mode_count", circuit.mode_count}, {"elements", elements}, {"detectors", detectors}};
}

Circuit fockherald::circuit_from_json(const nlohmann::json &j) {
    Circuit circuit;
    try {
        circuit.mode_count = j.at("mode_count").get<size_t>();
        for (const auto &e : j.at("elements")) {
            auto type = e.at("type").get<std::string>();
            if (type == "beamsplitter") {
                circuit.elements.push_back(BeamSplitter{
                    e.at("mode_a").get<size_t>(), e.at("mode_b").get<size_t>(), e.at("reflectivity").get<double>()});
            } else if (type == "loss") {
                circuit.elements.push_back(LossChannel{e.at("mode").get<size_t>(), e.at("transmission").get<double>()});
            } else {
                throw ValidationError("unknown element type '" + type + "'");
            }
        }
        if (j.contains("detectors")) {
            for (const auto &d : j.at("detectors")) {
                circuit.detectors.push_back(detector_from_json(d));
            }
        }
    } catch (const nlohmann::json::exception &ex) {
        throw ValidationError(std::string("bad circuit JSON: ") + ex.what());
    }
    circuit.validate();
    return circuit;
}
