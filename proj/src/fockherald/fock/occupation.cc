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

#include "fockherald/fock/occupation.h"

#include <numeric>

#include "fockherald/errors.h"

using namespace fockherald;

uint32_t OccupationVector::at(size_t mode) const {
    if (mode >= counts_.size()) {
        throw DimensionError(
            "mode " + std::to_string(mode) + " out of range for " + std::to_string(counts_.size()) + " modes");
    }
    return counts_[mode];
}

uint32_t OccupationVector::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), uint32_t{0});
}

OccupationVector OccupationVector::without(size_t mode) const {
    if (mode >= counts_.size()) {
        throw DimensionError("cannot remove mode " + std::to_string(mode));
    }
    std::vector<uint32_t> out;
    out.reserve(counts_.size() - 1);
    for (size_t k = 0; k < counts_.size(); k++) {
        if (k != mode) {
            out.push_back(counts_[k]);
        }
    }
    return OccupationVector(std::move(out));
}

OccupationVector OccupationVector::concat(const OccupationVector &other) const {
    std::vector<uint32_t> out = counts_;
    out.insert(out.end(), other.counts_.begin(), other.counts_.end());
    return OccupationVector(std::move(out));
}

std::string OccupationVector::str() const {
    std::string out = "|";
    for (size_t k = 0; k < counts_.size(); k++) {
        if (k) {
            out += ",";
        }
        out += std::to_string(counts_[k]);
    }
    out += ">";
    return out;
}
