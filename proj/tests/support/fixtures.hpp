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

#include <memory>
#include <random>
#include <vector>

#include "d2dsim/adp_scheduler.hpp"
#include "d2dsim/config.hpp"
#include "d2dsim/scenario.hpp"
#include "d2dsim/state.hpp"

namespace d2dsim::fixture {

/// Hand-built link budget plus state, for cases too small or too specific to
/// come out of the geometry generator.
struct Bench {
    LinkBudget lb;
    RateTable table = RateTable::default_table();
    double noise_w = 1e-13;
    ActionRules rules;
    std::shared_ptr<const Catalog> catalog;
    SystemState state;

    RadioContext ctx() const { return RadioContext{lb, table, noise_w, rules}; }
};

inline std::shared_ptr<const Catalog> small_catalog(std::vector<std::pair<Bits, Step>> items) {
    auto cat = std::make_shared<Catalog>();
    for (std::size_t i = 0; i < items.size(); ++i) {
        cat->items.push_back({content_id(static_cast<std::uint32_t>(i)), items[i].first, items[i].second,
                              i == 0 ? ContentCategory::Ebook : ContentCategory::Video});
    }
    return cat;
}

/// Endpoints 0..n_bs-1 are BSs (macro first, then micro), the rest UEs.
inline LinkBudget empty_budget(int n_macro, int n_micro, int n_ue, double noise_w) {
    std::vector<EndpointKind> kinds;
    for (int i = 0; i < n_macro; ++i) kinds.push_back(EndpointKind::MacroBS);
    for (int i = 0; i < n_micro; ++i) kinds.push_back(EndpointKind::MicroBS);
    for (int i = 0; i < n_ue; ++i) kinds.push_back(EndpointKind::UE);
    return LinkBudget(kinds, static_cast<std::uint32_t>(n_macro + n_micro), noise_w);
}

/// Random link budget: every pair has a finite path, received power uniform
/// in [lo, hi] dBm, coverage by the -100 dBm rule.
inline void randomize(LinkBudget& lb, std::mt19937_64& rng, double lo = -112.0, double hi = -70.0) {
    std::uniform_real_distribution<double> rx_dbm(lo, hi);
    for (std::uint32_t t = 0; t < lb.n_endpoints(); ++t) {
        const EndpointId tx = endpoint_id(t);
        const double p_dbm = lb.kind(tx) == EndpointKind::MacroBS ? 43.0 : lb.kind(tx) == EndpointKind::MicroBS ? 30.0 : 23.0;
        for (std::uint32_t u = 0; u < lb.n_ue(); ++u) {
            const EndpointId rx = endpoint_id(lb.first_ue() + u);
            if (tx == rx) continue;
            const double r = rx_dbm(rng);
            lb.set(tx, rx, dbm_to_watts(p_dbm), std::pow(10.0, (p_dbm - r) / 10.0), r > -100.0);
        }
    }
    lb.finalize();
}

/// Toy instance: 1 macro, 1 micro, one serving UE holding item 0, three
/// downloaders; 4 RBs; small items so that completions happen within a few
/// steps.
inline Bench toy(std::mt19937_64& rng) {
    Bench b;
    b.rules.n_rbs = 4;
    b.lb = empty_budget(1, 1, 4, b.noise_w);
    randomize(b.lb, rng);
    std::uniform_int_distribution<Bits> size(1500, 6000);
    std::uniform_int_distribution<Step> deadline(6, 12);
    b.catalog = small_catalog({{size(rng), deadline(rng)}, {size(rng), deadline(rng)}, {size(rng), deadline(rng)}});
    b.state = SystemState(b.catalog, 4, 2);
    b.state.set_step(4);
    // Serving UE: item 0 fully or partly downloaded.
    b.state.reveal(0, content_id(0), 0);
    std::uniform_int_distribution<int> coin(0, 1);
    const Bits l0 = (*b.catalog)[content_id(0)].size_bits;
    b.state.add_bits(0, content_id(0), coin(rng) ? l0 : l0 / 2);
    std::uniform_int_distribution<Step> want(0, 3);
    std::uniform_int_distribution<std::uint32_t> item(0, 2);
    for (std::uint32_t u = 1; u <= 3; ++u) {
        b.state.reveal(u, content_id(0), want(rng));
        if (coin(rng)) b.state.reveal(u, content_id(item(rng)), want(rng));
    }
    return b;
}

/// One BS serving one UE with a fixed rate on every RB.
inline Bench single_link(Bits size, Step deadline, int n_rbs, double sinr_db) {
    Bench b;
    b.rules.n_rbs = n_rbs;
    b.lb = empty_budget(1, 0, 1, b.noise_w);
    const double p = 1.0;
    b.lb.set(endpoint_id(0), endpoint_id(1), p, p / (b.noise_w * std::pow(10.0, sinr_db / 10.0)), true);
    b.lb.finalize();
    b.catalog = small_catalog({{size, deadline}});
    b.state = SystemState(b.catalog, 1, 1);
    return b;
}

/// One sector, one user, one RB, nothing else transmitting. Every position in
/// the cell clears the top table row (38 dB at the cell corner), so the rate
/// is the per-RB cap `rho` on every step. No micros, so no muting either. One request for one item of
/// `size` bits at step `want`.
inline SimConfig fixed_rate_config(Bits size, Bits rho, Step want = 5) {
    SimConfig c = make_preset(Preset::Desk);
    c.scenario.sectors_per_site = 1;
    c.scenario.n_micro_per_macro = 0;
    c.scenario.n_users = 1;
    c.scenario.users_per_micro_cluster = 0;
    c.scenario.n_rbs = 1;
    c.scenario.user_speed_mps = 0.0;
    c.scenario.coverage_threshold_dbm = -100.0;
    c.radio.max_bits_per_rb = rho;
    c.pf.abs_period = 0;
    for (auto& cat : c.workload.categories) cat.items = 0;
    auto& v = c.workload.categories[static_cast<std::size_t>(category_slot(ContentCategory::Video))];
    v = {1, size, 1'000'000, want, want, 1.0};
    c.engine.steps = want + (size + rho - 1) / rho + 10;
    return c;
}

}  // namespace d2dsim::fixture
