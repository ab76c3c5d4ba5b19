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

#pragma once

#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "d2dsim/types.hpp"

namespace d2dsim {

/// SINR-to-bits staircase. Row i applies for SINR >= threshold_i (closed lower
/// bound); below the first row the rate is zero. Comparisons are done in the
/// linear domain against thresholds converted once at construction.
class RateTable {
   public:
    struct Row {
        double threshold_db;
        Bits bits;
    };

    RateTable(std::vector<Row> rows, Bits max_bits_per_rb);

    /// 15-row CQI-style table from -6.5 dB to 20 dB, scaled so that the top
    /// row equals 712 bits per RB per subframe.
    static RateTable default_table(Bits max_bits_per_rb = 712);

    /// Two columns per line: threshold in dB, bits per RB. '#' starts a comment.
    static RateTable parse(std::string_view text, Bits max_bits_per_rb);
    static RateTable load(const std::filesystem::path& path, Bits max_bits_per_rb);

    Bits lookup(double sinr_linear) const;

    std::span<const Row> rows() const { return rows_; }
    std::span<const double> linear_thresholds() const { return linear_; }
    Bits max_bits_per_rb() const { return max_bits_; }

   private:
    std::vector<Row> rows_;
    std::vector<double> linear_;
    Bits max_bits_;
};

inline Bits sinr_to_delta(double sinr_linear, const RateTable& table) { return table.lookup(sinr_linear); }

}  // namespace d2dsim
