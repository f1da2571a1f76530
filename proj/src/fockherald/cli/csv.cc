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

#include "fockherald/cli/csv.h"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

using namespace fockherald;
using namespace fockherald::cli;

std::string cli::format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", value);
    return buf;
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {
}

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size()) {
        throw std::invalid_argument(
            "row has " + std::to_string(cells.size()) + " cells but the table has " +
            std::to_string(columns_.size()) + " columns");
    }
    rows_.push_back(std::move(cells));
}

namespace {

std::string quote(const std::string &cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) {
        return cell;
    }
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

void append_line(std::string &out, const std::vector<std::string> &cells) {
    for (size_t k = 0; k < cells.size(); k++) {
        if (k) {
            out += ',';
        }
        out += quote(cells[k]);
    }
    out += '\n';
}

}  // namespace

std::string Table::to_csv() const {
    std::string out;
    append_line(out, columns_);
    for (const auto &row : rows_) {
        append_line(out, row);
    }
    return out;
}

nlohmann::json Table::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &row : rows_) {
        nlohmann::json obj = nlohmann::json::object();
        for (size_t k = 0; k < columns_.size(); k++) {
            const std::string &cell = row[k];
            char *end = nullptr;
            double v = cell.empty() ? 0 : std::strtod(cell.c_str(), &end);
            if (!cell.empty() && end == cell.c_str() + cell.size()) {
                obj[columns_[k]] = v;
            } else {
                obj[columns_[k]] = cell;
            }
        }
        out.push_back(std::move(obj));
    }
    return out;
}
