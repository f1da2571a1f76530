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

#ifndef FOCKHERALD_ERRORS_H
#define FOCKHERALD_ERRORS_H

#include <stdexcept>
#include <string>

namespace fockherald {

/// Mode index out of range, or operands over different mode counts.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An argument outside the mathematical domain of a formula.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A beamsplitter chain cannot give uniform arrival statistics for the requested length.
struct InfeasibleUniformityError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Misuse of an API, e.g. measuring a mode that was already removed.
struct UsageError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A circuit or configuration failed validation.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The classical arrival model was asked about a circuit whose paths recombine.
struct RecombinationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration refused because it would exceed its size bound.
struct EnumerationBoundError : std::length_error {
    using std::length_error::length_error;
};

/// Fidelity requested for an ensemble with zero heralding probability.
struct UndefinedFidelityError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace fockherald

#endif
