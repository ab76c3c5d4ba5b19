/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The d2dsim Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "d2dsim/rate_table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "d2dsim/error.hpp"

namespace d2dsim {

RateTable::RateTable(std::vector<Row> rows, Bits max_bits_per_rb) : rows_(std::move(rows)), max_bits_(max_bits_per_rb) {
    if (rows_.empty()) throw ConfigError("rate table has no rows");
    if (max_bits_ <= 0) throw ConfigError("max_bits_per_rb must be positive");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].bits < 0) throw ConfigError("rate table bits must be non-negative");
        if (i > 0 && !(rows_[i].threshold_db > rows_[i - 1].threshold_db)) {
            throw ConfigError("rate table thresholds must be strictly increasing");
        }
        if (i > 0 && rows_[i].bits < rows_[i - 1].bits) {
            throw ConfigError("rate table bits must be non-decreasing");
        }
    }
    linear_.reserve(rows_.size());
    for (const auto& r : rows_) linear_.push_back(std::pow(10.0, r.threshold_db / 10.0));
}

RateTable RateTable::default_table(Bits max_bits_per_rb) {
    // CQI 1..15 spectral efficiencies scaled to 712 bits at CQI 15.
    return RateTable(
        {
            {-6.5, 20},
            {-4.5, 30},
            {-2.5, 48},
            {-0.5, 77},
            {1.5, 112},
            {3.5, 151},
            {5.0, 189},
            {7.0, 245},
            {9.0, 308},
            {10.5, 350},
            {12.5, 426},
            {14.5, 500},
            {16.5, 580},
            {18.5, 656},
            {20.0, 712},
        },
        max_bits_per_rb);
}

RateTable RateTable::parse(std::string_view text, Bits max_bits_per_rb) {
    std::vector<Row> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double thr = 0.0;
        long long bits = 0;
        if (!(ls >> thr)) continue;
        if (!(ls >> bits)) throw ConfigError("rate table line " + std::to_string(line_no) + ": expected two columns");
        std::string extra;
        if (ls >> extra) throw ConfigError("rate table line " + std::to_string(line_no) + ": trailing data");
        rows.push_back({thr, static_cast<Bits>(bits)});
    }
    return RateTable(std::move(rows), max_bits_per_rb);
}

RateTable RateTable::load(const std::filesystem::path& path, Bits max_bits_per_rb) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read rate table " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), max_bits_per_rb);
}

Bits RateTable::lookup(double sinr_linear) const {
    // First threshold strictly above the SINR; the row before it applies.
    const auto it = std::upper_bound(linear_.begin(), linear_.end(), sinr_linear);
    if (it == linear_.begin()) return 0;
    const auto row = static_cast<std::size_t>(it - linear_.begin()) - 1;
    return std::min(rows_[row].bits, max_bits_);
}

}  // namespace d2dsim
