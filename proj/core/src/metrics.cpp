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

#include "d2dsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace d2dsim {

Bits StepMetrics::total_bits() const {
    Bits sum = 0;
    for (const auto& row : bits)
        for (Bits b : row) sum += b;
    return sum;
}

Bits StepMetrics::bits_by_kind(EndpointKind k) const {
    Bits sum = 0;
    for (Bits b : bits[static_cast<std::size_t>(kind_slot(k))]) sum += b;
    return sum;
}

void record_transfers(StepMetrics& m, const Action& a, const DeltaMap& delta, const TransferResult& chi,
                      const LinkBudget& lb, const Catalog& catalog) {
    for (const auto& c : chi.chi) {
        const auto k = static_cast<std::size_t>(kind_slot(lb.kind(c.tx)));
        const auto cat = static_cast<std::size_t>(category_slot(catalog[c.content].category));
        m.bits[k][cat] += c.bits;
    }
    std::set<int> rbs;
    m.rbs_used = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (delta[i] <= 0) continue;
        ++m.rbs_used;
        rbs.insert(a.triplets[i].rb);
    }
    m.distinct_rbs = static_cast<std::int64_t>(rbs.size());
    m.bits_per_rb = m.rbs_used > 0 ? static_cast<double>(m.total_bits()) / static_cast<double>(m.rbs_used) : 0.0;
    m.rb_reuse = m.distinct_rbs > 0 ? static_cast<double>(m.rbs_used) / static_cast<double>(m.distinct_rbs) : 0.0;
}

void write_metrics_header(std::ostream& os) {
    os << kMetricsHeader << '\n';
    os << "step";
    for (int k = 0; k < kNumKinds; ++k)
        for (int c = 0; c < kNumCategories; ++c)
            fmt::print(os, ",bits_{}_{}", to_string(static_cast<EndpointKind>(k)),
                       to_string(static_cast<ContentCategory>(c)));
    for (int k = 0; k < kNumKinds; ++k) fmt::print(os, ",energy_{}_j", to_string(static_cast<EndpointKind>(k)));
    os << ",rbs_used,distinct_rbs,bits_per_rb,rb_reuse";
    for (int c = 0; c < kNumCategories; ++c) fmt::print(os, ",revealed_{}", to_string(static_cast<ContentCategory>(c)));
    os << ",completed,failed,active\n";
}

void write_metrics_row(std::ostream& os, const StepMetrics& m) {
    fmt::print(os, "{}", m.step);
    for (const auto& row : m.bits)
        for (Bits b : row) fmt::print(os, ",{}", b);
    for (double e : m.energy_j) fmt::print(os, ",{}", e);
    fmt::print(os, ",{},{},{},{}", m.rbs_used, m.distinct_rbs, m.bits_per_rb, m.rb_reuse);
    for (auto r : m.revealed) fmt::print(os, ",{}", r);
    fmt::print(os, ",{},{},{}\n", m.completions.size(), m.failures.size(), m.active);
}

void write_metrics(std::ostream& os, std::span<const StepMetrics> stream) {
    write_metrics_header(os);
    for (const auto& m : stream) write_metrics_row(os, m);
}

void write_events(std::ostream& os, std::span<const StepMetrics> stream) {
    os << "# d2dsim-events v1\nstep,event,user,content,category,elapsed_steps\n";
    for (const auto& m : stream) {
        for (const auto& c : m.completions) {
            fmt::print(os, "{},completed,{},{},{},{}\n", m.step, c.user, to_index(c.content), to_string(c.category),
                       c.elapsed_steps);
        }
        for (const auto& f : m.failures) {
            fmt::print(os, "{},failed,{},{},{},\n", m.step, f.user, to_index(f.content), to_string(f.category));
        }
    }
}

double Summary::d2d_share(ContentCategory c) const {
    const auto& s = categories[static_cast<std::size_t>(category_slot(c))];
    return s.bits > 0 ? static_cast<double>(s.bits_d2d) / static_cast<double>(s.bits) : 0.0;
}

Step nearest_rank(std::span<const Step> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("percentile of an empty list");
    const auto n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * n));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

Summary summarize(std::span<const StepMetrics> stream) {
    if (stream.empty()) throw std::invalid_argument("summary of an empty metrics stream");
    Summary s;
    s.steps = static_cast<Step>(stream.size());
    CategoryArray<std::vector<Step>> times;
    std::int64_t rbs = 0;
    double reuse_sum = 0.0;
    std::int64_t reuse_steps = 0;

    for (const auto& m : stream) {
        for (int k = 0; k < kNumKinds; ++k) {
            const auto ks = static_cast<std::size_t>(k);
            for (int c = 0; c < kNumCategories; ++c) {
                const auto cs = static_cast<std::size_t>(c);
                const Bits b = m.bits[ks][cs];
                s.bits[ks] += static_cast<double>(b);
                s.total_bits += b;
                s.categories[cs].bits += b;
                if (static_cast<EndpointKind>(k) == EndpointKind::UE) s.categories[cs].bits_d2d += b;
            }
            s.energy_j[ks] += m.energy_j[ks];
        }
        rbs += m.rbs_used;
        if (m.rbs_used > 0) {
            reuse_sum += m.rb_reuse;
            ++reuse_steps;
        }
        for (int c = 0; c < kNumCategories; ++c) s.categories[static_cast<std::size_t>(c)].requests += m.revealed[static_cast<std::size_t>(c)];
        for (const auto& c : m.completions) {
            const auto cs = static_cast<std::size_t>(category_slot(c.category));
            ++s.categories[cs].completed;
            times[cs].push_back(c.elapsed_steps);
        }
        for (const auto& f : m.failures) ++s.categories[static_cast<std::size_t>(category_slot(f.category))].failed;
    }

    for (int k = 0; k < kNumKinds; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        s.total_energy_j += s.energy_j[ks];
        if (s.bits[ks] > 0.0) s.energy_per_bit[ks] = s.energy_j[ks] / s.bits[ks];
    }
    if (s.total_bits > 0) s.total_energy_per_bit = s.total_energy_j / static_cast<double>(s.total_bits);
    if (rbs > 0) s.mean_bits_per_rb = static_cast<double>(s.total_bits) / static_cast<double>(rbs);
    if (reuse_steps > 0) s.mean_rb_reuse = reuse_sum / static_cast<double>(reuse_steps);

    for (int c = 0; c < kNumCategories; ++c) {
        const auto cs = static_cast<std::size_t>(c);
        auto& cat = s.categories[cs];
        cat.still_active = cat.requests - cat.completed - cat.failed;
        s.requests += cat.requests;
        s.completed += cat.completed;
        s.failed += cat.failed;
        s.still_active += cat.still_active;
        auto& t = times[cs];
        if (t.empty()) continue;
        std::sort(t.begin(), t.end());
        cat.completion_p50 = nearest_rank(t, 50.0);
        cat.completion_p90 = nearest_rank(t, 90.0);
        cat.completion_max = t.back();
        double sum = 0.0;
        for (Step x : t) sum += static_cast<double>(x);
        cat.completion_mean = sum / static_cast<double>(t.size());
    }
    return s;
}

namespace {

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const Summary& s) {
    nlohmann::json j;
    j["schema_version"] = kSummarySchemaVersion;
    j["steps"] = s.steps;
    j["total_bits"] = s.total_bits;
    j["total_energy_j"] = s.total_energy_j;
    j["total_energy_per_bit_j"] = opt(s.total_energy_per_bit);
    j["mean_bits_per_rb"] = opt(s.mean_bits_per_rb);
    j["mean_rb_reuse"] = opt(s.mean_rb_reuse);
    j["requests"] = s.requests;
    j["completed"] = s.completed;
    j["failed"] = s.failed;
    j["still_active"] = s.still_active;
    for (int k = 0; k < kNumKinds; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        auto& n = j["by_kind"][std::string(to_string(static_cast<EndpointKind>(k)))];
        n["bits"] = static_cast<Bits>(s.bits[ks]);
        n["energy_j"] = s.energy_j[ks];
        n["energy_per_bit_j"] = opt(s.energy_per_bit[ks]);
    }
    for (int c = 0; c < kNumCategories; ++c) {
        const auto& cat = s.categories[static_cast<std::size_t>(c)];
        auto& n = j["by_category"][std::string(to_string(static_cast<ContentCategory>(c)))];
        n["bits"] = cat.bits;
        n["bits_d2d"] = cat.bits_d2d;
        n["requests"] = cat.requests;
        n["completed"] = cat.completed;
        n["failed"] = cat.failed;
        n["still_active"] = cat.still_active;
        n["completion_p50_steps"] = opt(cat.completion_p50);
        n["completion_p90_steps"] = opt(cat.completion_p90);
        n["completion_max_steps"] = opt(cat.completion_max);
        n["completion_mean_steps"] = opt(cat.completion_mean);
    }
    return j;
}

}  // namespace d2dsim
