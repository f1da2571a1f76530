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

#include "fockherald/cnot/channel.h"

#include <map>

#include "fockherald/errors.h"

using namespace fockherald;
using namespace fockherald::cnot;

HeraldedChannel::HeraldedChannel(const CnotConfig &cfg) {
    Circuit circuit = build_cnot(cfg);
    auto rails = circuit.unmeasured_modes();
    const size_t padding = circuit.mode_count - cfg.mode_count;

    // Logical output basis k, as an occupation of the surviving rails.
    std::map<OccupationVector, size_t> logical_index;
    for (size_t k = 0; k < 4; k++) {
        TwoQubitState basis{};
        basis[k] = 1;
        logical_index[encode_output(cfg, basis).amplitudes().begin()->first] = k;
    }

    // record -> rail occupation -> amplitude per logical input
    std::map<std::vector<uint32_t>, std::map<OccupationVector, Eigen::Vector4cd>> grouped;
    for (size_t i = 0; i < 4; i++) {
        TwoQubitState basis{};
        basis[i] = 1;
        SparseState state = encode_input(cfg, basis);
        if (padding > 0) {
            state = tensor(state, SparseState::vacuum(padding));
        }
        for (const auto &element : circuit.elements) {
            const auto *bs = std::get_if<BeamSplitter>(&element);
            if (bs == nullptr) {
                throw ValidationError("heralded channel supports beamsplitter networks only");
            }
            state = apply_beamsplitter(state, *bs);
        }
        for (const auto &[occ, amp] : state.amplitudes()) {
            std::vector<uint32_t> record;
            record.reserve(circuit.detectors.size());
            for (const auto &d : circuit.detectors) {
                record.push_back(occ[d.mode]);
            }
            std::vector<uint32_t> rail_counts;
            for (size_t m : rails) {
                rail_counts.push_back(occ[m]);
            }
            auto [it, inserted] =
                grouped[record].try_emplace(OccupationVector(std::move(rail_counts)), Eigen::Vector4cd::Zero());
            it->second[i] += amp;
        }
    }

    Eigen::Matrix4cd ideal = Eigen::Matrix4cd::Zero();
    for (size_t k = 0; k < 4; k++) {
        TwoQubitState basis{};
        basis[k] = 1;
        auto out = apply_ideal_cnot(basis);
        for (size_t j = 0; j < 4; j++) {
            ideal(j, k) = out[j];
        }
    }

    herald_operator_.setZero();
    for (const auto &[record, outputs] : grouped) {
        double factor = 1;
        for (size_t d = 0; d < record.size(); d++) {
            factor *= outcome_factor(record[d], circuit.detectors[d].efficiency, circuit.detectors[d].condition);
        }
        if (factor <= 0) {
            continue;
        }
        Eigen::Matrix4cd logical_part = Eigen::Matrix4cd::Zero();
        for (const auto &[rail_occ, column] : outputs) {
            herald_operator_ += factor * (column.conjugate() * column.transpose());
            auto it = logical_index.find(rail_occ);
            if (it != logical_index.end()) {
                logical_part.row(it->second) += column.transpose();
            }
        }
        records_.push_back({factor, ideal.adjoint() * logical_part});
    }
}

double HeraldedChannel::probability(const TwoQubitState &psi) const {
    Eigen::Vector4cd v(psi[0], psi[1], psi[2], psi[3]);
    return (v.adjoint() * herald_operator_ * v)(0, 0).real();
}

FidelityProbability HeraldedChannel::evaluate(const TwoQubitState &psi) const {
    Eigen::Vector4cd v(psi[0], psi[1], psi[2], psi[3]);
    double p = (v.adjoint() * herald_operator_ * v)(0, 0).real();
    double overlap = 0;
    for (const auto &r : records_) {
        overlap += r.factor * std::norm((v.adjoint() * r.overlap * v)(0, 0));
    }
    if (p <= 0) {
        throw UndefinedFidelityError("fidelity is undefined: the heralding probability is zero");
    }
    return {overlap / p, p};
}

double HeraldedChannel::min_probability() const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(herald_operator_, Eigen::EigenvaluesOnly);
    return std::max(0.0, solver.eigenvalues()(0));
}
