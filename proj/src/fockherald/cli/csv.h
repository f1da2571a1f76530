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

#ifndef FOCKHERALD_CLI_CSV_H
#define FOCKHERALD_CLI_CSV_H

#include <string>
#include <vector>

#include "json.hpp"

namespace fockherald::cli {

/// printf "%.15g" rendering.
std::string format_number(double value);

/// A rectangular result table. Cells are stored pre-formatted so CSV and JSON
/// renderings are byte-stable across runs.
class Table {
   public:
    explicit Table(std::vector<std::string> columns);

    const std::vector<std::string> &columns() const {
        return columns_;
    }
    const std::vector<std::vector<std::string>> &rows() const {
        return rows_;
    }

    /// Throws std::invalid_argument if the width does not match the header.
    void add_row(std::vector<std::string> cells);

    /// One header line, then one line per row. Cells containing ',' or '"' are quoted.
    std::string to_csv() const;
    /// Array of objects keyed by column name. Numeric cells become JSON numbers.
    nlohmann::json to_json() const;

   private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace fockherald::cli

#endif
