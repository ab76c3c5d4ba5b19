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

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "d2dsim/energy.hpp"
#include "d2dsim/state.hpp"
#include "d2dsim/transfer.hpp"

namespace d2dsim {

template <class T>
using CategoryArray = std::array<T, kNumCategories>;

struct Completion {
    std::uint32_t user;
    ContentId content;
    ContentCategory category;
    Step elapsed_steps;
};

struct Failure {
    std::uint32_t user;
    ContentId content;
    ContentCategory category;
};

struct StepMetrics {
    Step step = 0;
    // [transmitter kind][content category]
    std::array<CategoryArray<Bits>, kNumKinds> bits{};
    KindArray energy_j{};
    std::int64_t rbs_used = 0;       // triplets with a positive rate
    std::int64_t distinct_rbs = 0;   // distinct RB indices among them
    double bits_per_rb = 0.0;
    double rb_reuse = 0.0;           // rbs_used / distinct_rbs, 0 when idle
    CategoryArray<std::int64_t> revealed{};
    std::vector<Completion> completions;
    std::vector<Failure> failures;
    std::uint32_t active = 0;

    Bits total_bits() const;
    Bits bits_by_kind(EndpointKind k) const;
};

/// Transfer-derived fields of a step (bits, RB usage). Pass the rates of the
/// action so that zero-rate triplets do not count as used RBs.
void record_transfers(StepMetrics& m, const Action& a, const DeltaMap& delta, const TransferResult& chi,
                      const LinkBudget& lb, const Catalog& catalog);

inline constexpr std::string_view kMetricsHeader = "# d2dsim-metrics v1";

void write_metrics_header(std::ostream& os);
void write_metrics_row(std::ostream& os, const StepMetrics& m);
void write_metrics(std::ostream& os, std::span<const StepMetrics> stream);

/// One line per completion or failure.
void write_events(std::ostream& os, std::span<const StepMetrics> stream);

struct CategorySummary {
    Bits bits = 0;
    Bits bits_d2d = 0;
    std::int64_t requests = 0;
    std::int64_t completed = 0;
    std::int64_t failed = 0;
    std::int64_t still_active = 0;
    // Nearest-rank percentiles of completion time in steps.
    std::optional<Step> completion_p50;
    std::optional<Step> completion_p90;
    std::optional<Step> completion_max;
    std::optional<double> completion_mean;
};

struct Summary {
    Step steps = 0;
    KindArray bits{};  // by transmitter kind, as doubles to ease ratios
    Bits total_bits = 0;
    KindArray energy_j{};
    double total_energy_j = 0.0;
    // Undefined (nullopt) when the denominator is zero.
    std::array<std::optional<double>, kNumKinds> energy_per_bit{};
    std::optional<double> total_energy_per_bit;
    std::optional<double> mean_bits_per_rb;
    std::optional<double> mean_rb_reuse;
    std::int64_t requests = 0;
    std::int64_t completed = 0;
    std::int64_t failed = 0;
    std::int64_t still_active = 0;
    CategoryArray<CategorySummary> categories{};

    double d2d_share(ContentCategory c) const;
};

/// Nearest-rank percentile of a sorted list (p in (0, 100]).
Step nearest_rank(std::span<const Step> sorted, double p);

/// Throws std::invalid_argument on an empty stream.
Summary summarize(std::span<const StepMetrics> stream);

inline constexpr int kSummarySchemaVersion = 1;

nlohmann::json to_json(const Summary& s);

}  // namespace d2dsim
