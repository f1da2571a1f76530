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

#ifndef FOCKHERALD_CNOT_CHANNEL_H
#define FOCKHERALD_CNOT_CHANNEL_H

#include <Eigen/Dense>
#include <vector>

#include "fockherald/cnot/cnot.h"

namespace fockherald::cnot {

/// The heralded gate as a linear map on the logical input, precomputed once per config.
///
/// For every detector record r (photon numbers at the measured modes) the unnormalized
/// output is M_r psi, kept with weight factor f_r. Then
///     P(psi)     = psi^dag (sum_r f_r M_r^dag M_r) psi
///     F(psi) P   = sum_r f_r |<CNOT psi| M_r psi>|^2.
/// This matches apply_gate + fidelity_and_probability, at a cost independent of the
/// photon-level simulation.
class HeraldedChannel {
   public:
    /// Throws ValidationError if the gate network contains anything but beamsplitters.
    explicit HeraldedChannel(const CnotConfig &cfg);

    FidelityProbability evaluate(const TwoQubitState &psi) const;
    double probability(const TwoQubitState &psi) const;

    /// Global minimum of P over normalized inputs: the smallest eigenvalue of the herald operator.
    double min_probability() const;
    const Eigen::Matrix4cd &herald_operator() const {
        return herald_operator_;
    }
    size_t record_count() const {
        return records_.size();
    }

   private:
    struct Record {
        double factor;
        /// overlap(j, i) = <CNOT e_j | M_r e_i> summed through the logical output basis.
        Eigen::Matrix4cd overlap;
    };
    std::vector<Record> records_;
    Eigen::Matrix4cd herald_operator_;
};

}  // namespace fockherald::cnot

#endif
