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

#include "fockherald/fock/sparse_state.h"

#include <cmath>
#include <sstream>

#include "fockherald/errors.h"

using namespace fockherald;

SparseState::SparseState(size_t mode_count) : mode_count_(mode_count) {
}

SparseState SparseState::vacuum(size_t mode_count) {
    SparseState s(mode_count);
    s.amplitudes_.emplace(OccupationVector(mode_count), 1.0);
    return s;
}

SparseState SparseState::basis(OccupationVector occupation, Amplitude amplitude) {
    SparseState s(occupation.mode_count());
    s.add(occupation, amplitude);
    s.prune();
    return s;
}

SparseState SparseState::from_terms(
    size_t mode_count, const std::vector<std::pair<OccupationVector, Amplitude>> &terms) {
    SparseState s(mode_count);
    for (const auto &[occ, amp] : terms) {
        s.add(occ, amp);
    }
    s.prune();
    return s;
}

Amplitude SparseState::amplitude(const OccupationVector &occupation) const {
    auto it = amplitudes_.find(occupation);
    return it == amplitudes_.end() ? Amplitude{0.0} : it->second;
}

double SparseState::norm_squared() const {
    double total = 0;
    for (const auto &[occ, amp] : amplitudes_) {
        total += std::norm(amp);
    }
    return total;
}

bool SparseState::is_normalized(double tolerance) const {
    return std::abs(norm_squared() - 1.0) <= tolerance;
}

SparseState SparseState::normalized() const {
    double n2 = norm_squared();
    if (n2 <= 0) {
        throw DomainError("cannot normalize the zero state");
    }
    return scaled(1.0 / std::sqrt(n2));
}

SparseState SparseState::scaled(Amplitude factor) const {
    SparseState out(mode_count_);
    for (const auto &[occ, amp] : amplitudes_) {
        out.amplitudes_.emplace_hint(out.amplitudes_.end(), occ, amp * factor);
    }
    out.prune();
    return out;
}

void SparseState::add(const OccupationVector &occupation, Amplitude amplitude) {
    if (occupation.mode_count() != mode_count_) {
        throw DimensionError(
            "occupation " + occupation.str() + " does not match mode count " + std::to_string(mode_count_));
    }
    amplitudes_[occupation] += amplitude;
}

void SparseState::prune(double threshold) {
    std::erase_if(amplitudes_, [&](const auto &entry) {
        return std::abs(entry.second) <= threshold;
    });
}

bool SparseState::approx_equals(const SparseState &other, double tolerance) const {
    if (mode_count_ != other.mode_count_) {
        return false;
    }
    for (const auto &[occ, amp] : amplitudes_) {
        if (std::abs(amp - other.amplitude(occ)) > tolerance) {
            return false;
        }
    }
    for (const auto &[occ, amp] : other.amplitudes_) {
        if (std::abs(amp - amplitude(occ)) > tolerance) {
            return false;
        }
    }
    return true;
}

std::string SparseState::str() const {
    std::stringstream out;
    bool first = true;
    for (const auto &[occ, amp] : amplitudes_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << amp.real() << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag()) << "i)" << occ.str();
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

SparseState fockherald::tensor(const SparseState &a, const SparseState &b) {
    SparseState out(a.mode_count() + b.mode_count());
    for (const auto &[occ_a, amp_a] : a.amplitudes()) {
        for (const auto &[occ_b, amp_b] : b.amplitudes()) {
            out.add(occ_a.concat(occ_b), amp_a * amp_b);
        }
    }
    out.prune();
    return out;
}

Amplitude fockherald::inner_product(const SparseState &a, const SparseState &b) {
    if (a.mode_count() != b.mode_count()) {
        throw DimensionError(
            "inner product of states over " + std::to_string(a.mode_count()) + " and " +
            std::to_string(b.mode_count()) + " modes");
    }
    const auto &small = a.size() <= b.size() ? a : b;
    const auto &large = a.size() <= b.size() ? b : a;
    Amplitude total = 0;
    for (const auto &[occ, amp] : small.amplitudes()) {
        Amplitude other = large.amplitude(occ);
        total += &small == &a ? std::conj(amp) * other : std::conj(other) * amp;
    }
    return total;
}

std::set<uint32_t> fockherald::total_photon_number(const SparseState &s) {
    std::set<uint32_t> out;
    for (const auto &[occ, amp] : s.amplitudes()) {
        out.insert(occ.total());
    }
    return out;
}
