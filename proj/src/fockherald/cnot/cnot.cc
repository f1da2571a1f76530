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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "fockherald/errors.h"

using namespace fockherald;
using namespace fockherald::cnot;

namespace {

constexpr std::array<const char *, 4> kBasisLabels{"|00>", "|01>", "|10>", "|11>"};

void put_qubit(OccupationVector &occ, const DualRailQubit &q, size_t bit) {
    occ[q.mode_h] = bit ? 1 : 0;
    occ[q.mode_v] = bit ? 0 : 1;
}

/// Position of each original mode in the output state, or -1 when measured.
std::vector<long> surviving_positions(const Circuit &circuit) {
    std::vector<long> pos(circuit.mode_count, -1);
    long next = 0;
    for (size_t m : circuit.unmeasured_modes()) {
        pos[m] = next++;
    }
    return pos;
}

}  // namespace

std::string cnot::detector_model_name(const DetectorModel &model) {
    if (std::holds_alternative<IdealNumberResolving>(model)) {
        return "ideal";
    }
    if (std::holds_alternative<NonDiscriminating>(model)) {
        return "nondiscriminating";
    }
    return "chain";
}

void CnotConfig::validate() const {
    std::vector<size_t> all{control.mode_h, control.mode_v, target.mode_h, target.mode_v};
    all.insert(all.end(), herald_one_modes.begin(), herald_one_modes.end());
    all.insert(all.end(), herald_zero_modes.begin(), herald_zero_modes.end());
    std::set<size_t> distinct;
    for (size_t m : all) {
        if (m >= mode_count) {
            throw DimensionError("CNOT config references mode " + std::to_string(m) + " of " + std::to_string(mode_count));
        }
        if (!distinct.insert(m).second) {
            throw ValidationError("CNOT config uses mode " + std::to_string(m) + " twice");
        }
    }
    if (distinct.size() != mode_count) {
        throw ValidationError("every CNOT mode must be a rail or a herald output");
    }
    for (size_t m : ancilla_photon_modes) {
        if (m >= mode_count) {
            throw DimensionError("ancilla mode out of range");
        }
        if (m == control.mode_h || m == control.mode_v || m == target.mode_h || m == target.mode_v) {
            throw ValidationError("ancilla photon cannot share a rail mode");
        }
    }
    if (beamsplitters.empty()) {
        throw ValidationError("CNOT config has no beamsplitters");
    }
    for (const auto &bs : beamsplitters) {
        validate_element(bs, mode_count);
    }
    auto check = [](double p, const char *what) {
        if (!(p >= 0 && p <= 1)) {
            throw ValidationError(std::string(what) + " must lie in [0,1]");
        }
    };
    if (const auto *nd = std::get_if<NonDiscriminating>(&detector_model)) {
        check(nd->efficiency, "detector efficiency");
    } else if (const auto *chain = std::get_if<ChainDetector>(&detector_model)) {
        check(chain->efficiency, "detector efficiency");
        check(chain->reflectivity, "chain reflectivity");
    }
}

CnotConfig CnotConfig::with_model(DetectorModel model) const {
    CnotConfig out = *this;
    out.detector_model = model;
    return out;
}

CnotConfig cnot::default_cnot_config() {
    const double s2 = std::sqrt(2.0);
    // Nonlinear-sign gate: the signal meets the ancilla photon at `ancilla_r`, then loses
    // amplitude to a vacuum mode at `vacuum_r`. Conditioned on (1, 0) this maps
    // a|0> + b|1> + c|2> -> sqrt(ancilla_r) (a|0> + b|1> - c|2>).
    const double ancilla_r = (3 - s2) / 7;
    const double vacuum_r = 5 - 3 * s2;

    CnotConfig cfg;
    cfg.beamsplitters = {
        {2, 3, 0.5},
        {0, 3, 0.5},
        {4, 0, ancilla_r},
        {0, 6, vacuum_r},
        {5, 3, ancilla_r},
        {3, 7, vacuum_r},
        {0, 3, 0.5},
        {2, 3, 0.5},
    };
    return cfg;
}

nlohmann::json cnot::detector_model_to_json(const DetectorModel &model) {
    if (const auto *nd = std::get_if<NonDiscriminating>(&model)) {
        return {{"type", "nondiscriminating"}, {"eta_eff", nd->efficiency}};
    }
    if (const auto *chain = std::get_if<ChainDetector>(&model)) {
        return {{"type", "chain"}, {"eta_ref", chain->reflectivity}, {"eta_eff", chain->efficiency}};
    }
    return {{"type", "ideal"}};
}

DetectorModel cnot::detector_model_from_json(const nlohmann::json &j) {
    try {
        auto type = j.at("type").get<std::string>();
        if (type == "ideal") {
            return IdealNumberResolving{};
        }
        if (type == "nondiscriminating") {
            return NonDiscriminating{j.at("eta_eff").get<double>()};
        }
        if (type == "chain") {
            return ChainDetector{j.at("eta_ref").get<double>(), j.at("eta_eff").get<double>()};
        }
        throw ValidationError("unknown detector model '" + type + "'");
    } catch (const nlohmann::json::exception &ex) {
        throw ValidationError(std::string("bad detector model JSON: ") + ex.what());
    }
}

nlohmann::json cnot::config_to_json(const CnotConfig &cfg) {
    nlohmann::json bss = nlohmann::json::array();
    for (const auto &bs : cfg.beamsplitters) {
        bss.push_back({{"mode_a", bs.mode_a}, {"mode_b", bs.mode_b}, {"reflectivity", bs.reflectivity}});
    }
    return {
        {"mode_count", cfg.mode_count},
        {"control", {{"h", cfg.control.mode_h}, {"v", cfg.control.mode_v}}},
        {"target", {{"h", cfg.target.mode_h}, {"v", cfg.target.mode_v}}},
        {"ancilla_photon_modes", cfg.ancilla_photon_modes},
        {"herald_one_modes", cfg.herald_one_modes},
        {"herald_zero_modes", cfg.herald_zero_modes},
        {"beamsplitters", bss},
        {"detector_model", detector_model_to_json(cfg.detector_model)},
    };
}

CnotConfig cnot::config_from_json(const nlohmann::json &j) {
    CnotConfig cfg;
    try {
        cfg.mode_count = j.at("mode_count").get<size_t>();
        cfg.control = {j.at("control").at("h").get<size_t>(), j.at("control").at("v").get<size_t>()};
        cfg.target = {j.at("target").at("h").get<size_t>(), j.at("target").at("v").get<size_t>()};
        cfg.ancilla_photon_modes = j.at("ancilla_photon_modes").get<std::vector<size_t>>();
        cfg.herald_one_modes = j.at("herald_one_modes").get<std::vector<size_t>>();
        cfg.herald_zero_modes = j.at("herald_zero_modes").get<std::vector<size_t>>();
        cfg.beamsplitters.clear();
        for (const auto &bs : j.at("beamsplitters")) {
            cfg.beamsplitters.push_back(
                {bs.at("mode_a").get<size_t>(), bs.at("mode_b").get<size_t>(), bs.at("reflectivity").get<double>()});
        }
        if (j.contains("detector_model")) {
            cfg.detector_model = detector_model_from_json(j.at("detector_model"));
        }
    } catch (const nlohmann::json::exception &ex) {
        throw ValidationError(std::string("bad CNOT config JSON: ") + ex.what());
    }
    cfg.validate();
    return cfg;
}

CnotConfig cnot::load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open CNOT config '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &ex) {
        throw ValidationError("cannot parse '" + path + "': " + ex.what());
    }
    return config_from_json(j);
}

TwoQubitState cnot::normalized(const TwoQubitState &psi) {
    double n2 = 0;
    for (const auto &a : psi) {
        n2 += std::norm(a);
    }
    if (n2 <= 0) {
        throw DomainError("zero two-qubit state");
    }
    TwoQubitState out;
    for (size_t k = 0; k < 4; k++) {
        out[k] = psi[k] / std::sqrt(n2);
    }
    return out;
}

TwoQubitState cnot::apply_ideal_cnot(const TwoQubitState &psi) {
    return {psi[0], psi[1], psi[3], psi[2]};
}

SparseState cnot::encode_input(const CnotConfig &cfg, const TwoQubitState &psi) {
    SparseState out(cfg.mode_count);
    for (size_t k = 0; k < 4; k++) {
        OccupationVector occ(cfg.mode_count);
        put_qubit(occ, cfg.control, k >> 1);
        put_qubit(occ, cfg.target, k & 1);
        for (size_t m : cfg.ancilla_photon_modes) {
            occ[m] += 1;
        }
        out.add(occ, psi[k]);
    }
    out.prune();
    return out;
}

SparseState cnot::encode_output(const CnotConfig &cfg, const TwoQubitState &psi) {
    Circuit circuit = build_cnot(cfg);
    auto pos = surviving_positions(circuit);
    DualRailQubit control{static_cast<size_t>(pos[cfg.control.mode_h]), static_cast<size_t>(pos[cfg.control.mode_v])};
    DualRailQubit target{static_cast<size_t>(pos[cfg.target.mode_h]), static_cast<size_t>(pos[cfg.target.mode_v])};
    SparseState out(4);
    for (size_t k = 0; k < 4; k++) {
        OccupationVector occ(4);
        put_qubit(occ, control, k >> 1);
        put_qubit(occ, target, k & 1);
        out.add(occ, psi[k]);
    }
    out.prune();
    return out;
}

Circuit cnot::build_cnot(const CnotConfig &cfg) {
    cfg.validate();
    Circuit circuit;
    circuit.mode_count = cfg.mode_count;
    for (const auto &bs : cfg.beamsplitters) {
        circuit.elements.push_back(bs);
    }

    if (std::holds_alternative<IdealNumberResolving>(cfg.detector_model)) {
        for (size_t m : cfg.herald_one_modes) {
            circuit.detectors.push_back({m, 1.0, ExactCount{1}});
        }
        for (size_t m : cfg.herald_zero_modes) {
            circuit.detectors.push_back({m, 1.0, NoClick{}});
        }
    } else if (const auto *nd = std::get_if<NonDiscriminating>(&cfg.detector_model)) {
        for (size_t m : cfg.herald_one_modes) {
            circuit.detectors.push_back({m, nd->efficiency, Click{}});
        }
        for (size_t m : cfg.herald_zero_modes) {
            circuit.detectors.push_back({m, nd->efficiency, NoClick{}});
        }
    } else {
        const auto &chain = std::get<ChainDetector>(cfg.detector_model);
        // Chain sub-circuits go after the gate; measured outputs never re-interfere.
        for (size_t m : cfg.herald_one_modes) {
            size_t transmitted = circuit.mode_count++;
            circuit.elements.push_back(BeamSplitter{m, transmitted, chain.reflectivity});
            circuit.detectors.push_back({m, chain.efficiency, Click{}});
            circuit.detectors.push_back({transmitted, chain.efficiency, NoClick{}});
        }
        for (size_t m : cfg.herald_zero_modes) {
            circuit.detectors.push_back({m, chain.efficiency, NoClick{}});
        }
    }
    circuit.validate();
    return circuit;
}

GateResult cnot::apply_gate(const CnotConfig &cfg, const TwoQubitState &psi) {
    Circuit circuit = build_cnot(cfg);
    SparseState input = encode_input(cfg, normalized(psi));
    OccupationVector padding(circuit.mode_count - cfg.mode_count);
    if (padding.mode_count() > 0) {
        input = tensor(input, SparseState::basis(padding));
    }
    Ensemble out = run(circuit, input);
    double p = heralding_probability(out);
    return {std::move(out), p};
}

FidelityProbability cnot::fidelity_and_probability(const Ensemble &e, const SparseState &ideal) {
    double p = 0;
    double overlap = 0;
    for (const auto &branch : e.branches()) {
        p += branch.weight;
        overlap += branch.weight * std::norm(inner_product(ideal, branch.state));
    }
    if (p <= 0) {
        throw UndefinedFidelityError("fidelity is undefined: the heralding probability is zero");
    }
    return {overlap / p, p};
}

std::string CalibrationReport::diagnostics() const {
    std::stringstream out;
    out << (passed ? "calibration passed" : "calibration FAILED") << "; herald probability " << herald_probability
        << ", spread " << herald_spread << "\n";
    for (const auto &e : entries) {
        out << "  " << e.label << ": fidelity " << e.fidelity << ", herald " << e.herald_probability << "\n";
    }
    for (const auto &p : problems) {
        out << "  problem: " << p << "\n";
    }
    return out.str();
}

nlohmann::json CalibrationReport::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &e : entries) {
        rows.push_back({{"input", e.label}, {"fidelity", e.fidelity}, {"herald_probability", e.herald_probability}});
    }
    return {
        {"passed", passed},
        {"herald_probability", herald_probability},
        {"herald_spread", herald_spread},
        {"inputs", rows},
        {"problems", problems},
    };
}

CalibrationReport cnot::calibrate(const CnotConfig &cfg) {
    CnotConfig ideal = cfg.with_model(IdealNumberResolving{});
    CalibrationReport report{true, 0.0, 0.0, {}, {}};

    std::vector<std::pair<std::string, TwoQubitState>> inputs;
    for (size_t k = 0; k < 4; k++) {
        TwoQubitState psi{};
        psi[k] = 1;
        inputs.emplace_back(kBasisLabels[k], psi);
    }
    const double h = 1 / std::sqrt(2.0);
    inputs.emplace_back("(|0>+|1>)|0>/sqrt2", TwoQubitState{h, 0, h, 0});

    double lo = 1;
    double hi = 0;
    for (const auto &[label, psi] : inputs) {
        GateResult result = apply_gate(ideal, psi);
        double fidelity = 0;
        if (result.herald_probability > 0) {
            fidelity = fidelity_and_probability(result.output, encode_output(ideal, apply_ideal_cnot(psi))).fidelity;
        }
        report.entries.push_back({label, fidelity, result.herald_probability});
        lo = std::min(lo, result.herald_probability);
        hi = std::max(hi, result.herald_probability);
        if (result.herald_probability <= 0) {
            report.problems.push_back(label + " is never heralded");
        } else if (fidelity < 1 - kCalibrationTolerance) {
            report.problems.push_back(label + " has fidelity " + std::to_string(fidelity) + " < 1");
        }
    }
    report.herald_probability = report.entries.front().herald_probability;
    report.herald_spread = hi - lo;
    if (report.herald_spread > kCalibrationTolerance) {
        report.problems.push_back("heralding probability depends on the input (spread " +
                                  std::to_string(report.herald_spread) + ")");
    }
    report.passed = report.problems.empty();
    return report;
}

void cnot::require_calibrated(const CnotConfig &cfg) {
    CalibrationReport report = calibrate(cfg);
    if (!report.passed) {
        throw ValidationError(report.diagnostics());
    }
}
