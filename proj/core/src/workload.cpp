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

#include "d2dsim/workload.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "d2dsim/error.hpp"

namespace d2dsim {

Rng workload_rng(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x776bu};
    return Rng(seq);
}

Workload generate_workload(const WorkloadConfig& cfg, const Catalog& catalog, std::uint32_t n_users, Rng& rng) {
    Workload w;
    if (cfg.requests_per_user <= 0 || n_users == 0) return w;

    std::vector<double> weights;
    std::array<std::uint32_t, kNumCategories> first{};
    std::array<std::uint32_t, kNumCategories> count{};
    for (int k = 0; k < kNumCategories; ++k) {
        const auto& spec = cfg.categories[static_cast<std::size_t>(k)];
        weights.push_back(spec.items > 0 ? spec.mix_weight : 0.0);
    }
    for (const auto& item : catalog.items) {
        const auto k = category_slot(item.category);
        if (count[k] == 0) first[k] = to_index(item.id);
        ++count[k];
    }
    if (std::all_of(weights.begin(), weights.end(), [](double x) { return x <= 0.0; })) {
        throw ConfigError("workload mix has no positive weight");
    }

    std::discrete_distribution<int> pick_cat(weights.begin(), weights.end());
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (std::uint32_t u = 0; u < n_users; ++u) {
        for (int n = 0; n < cfg.requests_per_user; ++n) {
            const int k = pick_cat(rng);
            const auto& spec = cfg.categories[static_cast<std::size_t>(k)];
            std::uniform_int_distribution<std::uint32_t> pick_item(0, count[static_cast<std::size_t>(k)] - 1);
            std::uniform_int_distribution<Step> pick_step(spec.request_first, spec.request_last);
            const ContentId c = content_id(first[static_cast<std::size_t>(k)] + pick_item(rng));
            const Step want = pick_step(rng);
            if (!seen.emplace(u, to_index(c)).second) continue;
            w.requests.push_back({u, c, want});
        }
    }
    std::sort(w.requests.begin(), w.requests.end(), [](const Request& a, const Request& b) {
        if (a.want != b.want) return a.want < b.want;
        if (a.user != b.user) return a.user < b.user;
        return to_index(a.content) < to_index(b.content);
    });
    return w;
}

}  // namespace d2dsim
