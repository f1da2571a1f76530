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

#ifndef FOCKHERALD_SCHEMES_SCHEMES_H
#define FOCKHERALD_SCHEMES_SCHEMES_H

#include <vector>

#include "fockherald/optics/circuit.h"

namespace fockherald::schemes {

struct CascadeConfig {
    size_t ports;
    double efficiency;
};

/// Fiber-loop time multiplexing, unrolled into one time-bin mode per round trip.
///
/// On round trip r each loop photon is coupled out to bin r with probability
/// `coupling_schedule[r]` (or `coupling` when the schedule is empty), then survives the
/// loop with probability `loop_transmission`. Photons still in the loop afterwards are
/// discarded unmeasured.
struct TdmConfig {
    double coupling;
    double loop_transmission;
    size_t round_trips;
    double efficiency;
    std::vector<double> coupling_schedule;

    double coupling_at(size_t round_trip) const;
};

struct ChainConfig {
    uint32_t k;
    double first_reflectivity;
    double efficiency;
};

struct TdmResult {
    /// P(m = j) for j = 0..round_trips.
    std::vector<double> distribution;
    /// Probability that at least one photon was still in the loop when counting stopped.
    double remainder_probability;
};

/// Binary tree of 50/50 beamsplitters: input on mode 0, N outputs on modes 0..N-1, each
/// with a Click detector of the given efficiency. Throws ValidationError unless N is a
/// power of two and at least 2.
Circuit build_tree_nport(size_t ports, double efficiency = 1.0);

/// P(m = j), j = 0..min(n, N), where m is the number of clicking outputs.
std::vector<double> simulate_cascade(uint32_t n, const CascadeConfig &cfg);

/// Mode 0 is the loop; mode r (1-based) is the bin of round trip r.
Circuit build_tdm_unrolled(const TdmConfig &cfg);
TdmResult simulate_tdm(uint32_t n, const TdmConfig &cfg);

/// Couplings 1/R, 1/(R-1), ..., 1 that out-couple a lossless loop uniformly over R bins.
std::vector<double> uniform_tdm_schedule(size_t round_trips);

/// Chain of k beamsplitters. Modes 0..k-1 are the reflected ports (Click), mode k the
/// terminal transmitted port (NoClick); input enters mode 0.
Circuit build_chain_detector(const ChainConfig &cfg);

/// Probability that all chain conditions hold for an n-photon input.
double simulate_chain(uint32_t n, const ChainConfig &cfg);

struct SuppressionRow {
    double efficiency;
    double reflectivity;
    uint32_t n;
    double p_m1;
};

/// P(m=1 | n) for every (efficiency, reflectivity) cell and n = 0..n_max, cell-major in
/// the order the lists are given.
std::vector<SuppressionRow> suppression_grid(
    const std::vector<double> &efficiencies, const std::vector<double> &reflectivities, uint32_t n_max);

}  // namespace fockherald::schemes

#endif
