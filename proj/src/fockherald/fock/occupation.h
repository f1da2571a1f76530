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

#ifndef FOCKHERALD_FOCK_OCCUPATION_H
#define FOCKHERALD_FOCK_OCCUPATION_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fockherald {

/// Photon counts per optical mode; the label of a Fock basis state.
///
/// Ordering is lexicographic over the counts, which fixes the iteration order of
/// every state map in the library.
class OccupationVector {
   public:
    OccupationVector() = default;
    explicit OccupationVector(size_t mode_count) : counts_(mode_count, 0) {
    }
    OccupationVector(std::initializer_list<uint32_t> counts) : counts_(counts) {
    }
    explicit OccupationVector(std::vector<uint32_t> counts) : counts_(std::move(counts)) {
    }

    size_t mode_count() const {
        return counts_.size();
    }
    uint32_t operator[](size_t mode) const {
        return counts_[mode];
    }
    uint32_t &operator[](size_t mode) {
        return counts_[mode];
    }
    const std::vector<uint32_t> &counts() const {
        return counts_;
    }

    /// Bounds-checked access; throws DimensionError.
    uint32_t at(size_t mode) const;

    uint32_t total() const;

    /// Copy with one mode deleted; later modes shift down by one.
    OccupationVector without(size_t mode) const;

    /// Concatenation `this ++ other`.
    OccupationVector concat(const OccupationVector &other) const;

    std::string str() const;

    auto operator<=>(const OccupationVector &) const = default;
    bool operator==(const OccupationVector &) const = default;

   private:
    std::vector<uint32_t> counts_;
};

}  // namespace fockherald

#endif
