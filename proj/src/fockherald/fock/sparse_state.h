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

#ifndef FOCKHERALD_FOCK_SPARSE_STATE_H
#define FOCKHERALD_FOCK_SPARSE_STATE_H

#include <complex>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fockherald/fock/occupation.h"

namespace fockherald {

using Amplitude = std::complex<double>;

/// Amplitudes at or below this magnitude are dropped.
inline constexpr double kPruneThreshold = 1e-14;

/// A pure multimode Fock state stored as a sparse map from basis label to amplitude.
///
/// No photon-number cutoff is imposed. Passive optics conserve photon number, so the
/// reachable support is finite and only populated entries are stored.
/// A zero-mode state is a scalar; it is what remains once every mode has been measured.
class SparseState {
   public:
    using AmplitudeMap = std::map<OccupationVector, Amplitude>;

    explicit SparseState(size_t mode_count);

    static SparseState vacuum(size_t mode_count);
    static SparseState basis(OccupationVector occupation, Amplitude amplitude = 1.0);
    /// Sums the given terms (duplicates accumulate) and prunes. Does not normalize.
    static SparseState from_terms(size_t mode_count, const std::vector<std::pair<OccupationVector, Amplitude>> &terms);

    size_t mode_count() const {
        return mode_count_;
    }
    const AmplitudeMap &amplitudes() const {
        return amplitudes_;
    }
    size_t size() const {
        return amplitudes_.size();
    }
    bool empty() const {
        return amplitudes_.empty();
    }

    Amplitude amplitude(const OccupationVector &occupation) const;
    double norm_squared() const;
    bool is_normalized(double tolerance = 1e-12) const;

    /// Throws DomainError when the state is zero.
    SparseState normalized() const;
    SparseState scaled(Amplitude factor) const;

    /// Accumulates into an entry. Intended for building states; call prune() after.
    void add(const OccupationVector &occupation, Amplitude amplitude);
    void prune(double threshold = kPruneThreshold);

    bool approx_equals(const SparseState &other, double tolerance) const;
    std::string str() const;

   private:
    size_t mode_count_;
    AmplitudeMap amplitudes_;
};

SparseState tensor(const SparseState &a, const SparseState &b);

/// <a|b>, conjugate-linear in `a`. Throws DimensionError on mode-count mismatch.
Amplitude inner_product(const SparseState &a, const SparseState &b);

/// The set of total photon numbers present in the state's support.
std::set<uint32_t> total_photon_number(const SparseState &s);

}  // namespace fockherald

#endif
