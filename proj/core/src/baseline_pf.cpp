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

#include "d2dsim/baseline_pf.hpp"

#include <algorithm>
#include <cmath>

#include "d2dsim/error.hpp"

namespace d2dsim {

namespace {

double biased_pilot(EndpointId bs, EndpointId user, const LinkBudget& lb, double bias_db) {
    const double p = lb.received_dbm(bs, user);
    return lb.kind(bs) == EndpointKind::MicroBS ? p + bias_db : p;
}

std::optional<EndpointId> strongest(EndpointId user, const LinkBudget& lb, double bias_db) {
    std::optional<EndpointId> best;
    double best_p = 0.0;
    for (EndpointId e : lb.covering(user)) {
        if (!is_bs(lb.kind(e))) continue;
        const double p = biased_pilot(e, user, lb, bias_db);
        if (!best || p > best_p) {
            best = e;
            best_p = p;
        }
    }
    return best;
}

Bits clean_rate(const RadioContext& ctx, EndpointId bs, EndpointId user) {
    if (!ctx.lb.coverage(bs, user)) return 0;
    return sinr_to_delta(sinr(ctx.lb, bs, user, ctx.noise_w, 0.0), ctx.table);
}

Bits backlog(const SystemState& s, std::uint32_t u) {
    Bits sum = 0;
    for (ContentId c : s.active(u)) sum += s.catalog()[c].size_bits - s.duplet(u, c).downloaded;
    return sum;
}

}  // namespace

std::optional<EndpointId> associate_cre(EndpointId user, const LinkBudget& lb, double cre_bias_db) {
    return strongest(user, lb, cre_bias_db);
}

bool is_cre_expanded(EndpointId user, const LinkBudget& lb, double cre_bias_db) {
    const auto biased = strongest(user, lb, cre_bias_db);
    if (!biased || lb.kind(*biased) != EndpointKind::MicroBS) return false;
    const auto plain = strongest(user, lb, 0.0);
    return plain && lb.kind(*plain) == EndpointKind::MacroBS;
}

bool abs_muted(Step k, const PfConfig& cfg) {
    if (cfg.abs_period <= 0) return false;
    const Step p = cfg.abs_period;
    return (((k - cfg.abs_offset) % p) + p) % p == 0;
}

Association associate_all(const LinkBudget& lb, double cre_bias_db) {
    Association a;
    a.serving.resize(lb.n_ue());
    a.expanded.resize(lb.n_ue(), false);
    for (std::uint32_t u = 0; u < lb.n_ue(); ++u) {
        const EndpointId e = endpoint_id(lb.first_ue() + u);
        a.serving[u] = associate_cre(e, lb, cre_bias_db);
        a.expanded[u] = is_cre_expanded(e, lb, cre_bias_db);
    }
    return a;
}

PfState::PfState(std::uint32_t n_users, const PfConfig& cfg)
    : avg_(n_users, cfg.avg_rate_floor), window_(cfg.ewma_window), floor_(cfg.avg_rate_floor) {
    if (cfg.ewma_window < 1) throw ConfigError("ewma_window must be >= 1");
    if (!(cfg.avg_rate_floor > 0.0)) throw ConfigError("avg_rate_floor must be > 0");
}

void PfState::update(const SystemState& s, const TransferResult& chi) {
    std::vector<double> got(avg_.size(), 0.0);
    for (const auto& c : chi.chi) got[s.user_index(c.rx)] += static_cast<double>(c.bits);
    const double beta = 1.0 / window_;
    for (std::size_t u = 0; u < avg_.size(); ++u) {
        avg_[u] = std::max(floor_, (1.0 - beta) * avg_[u] + beta * got[u]);
    }
}

Action pf_schedule(const SystemState& s, const RadioContext& ctx, const Association& assoc, const PfState& pf,
                   const PfConfig& cfg) {
    const auto& lb = ctx.lb;
    const bool muted = abs_muted(s.step(), cfg);
    const int n_rbs = ctx.rules.n_rbs;

    std::vector<std::vector<std::uint32_t>> cell(lb.first_ue());
    for (std::uint32_t u = 0; u < s.n_users(); ++u) {
        if (!assoc.serving[u] || s.downloader_priority(u) == kNoStep) continue;
        cell[to_index(*assoc.serving[u])].push_back(u);
    }

    Action a;
    for (std::uint32_t b = 0; b < lb.first_ue(); ++b) {
        const EndpointId bs = endpoint_id(b);
        if (cell[b].empty()) continue;
        if (muted && lb.kind(bs) == EndpointKind::MacroBS) continue;

        std::vector<std::uint32_t> first;
        std::vector<std::uint32_t> rest;
        for (auto u : cell[b]) {
            (muted && assoc.expanded[u] ? first : rest).push_back(u);
        }
        std::vector<Bits> rate(s.n_users(), 0);
        for (auto u : cell[b]) rate[u] = clean_rate(ctx, bs, s.user_endpoint(u));

        auto pick = [&](const std::vector<std::uint32_t>& group, const std::vector<Bits>* left) {
            std::optional<std::uint32_t> best;
            double best_m = 0.0;
            for (auto u : group) {
                if (left && (*left)[u] <= 0) continue;
                const double m = static_cast<double>(rate[u]) / pf.avg_rate(u);
                if (!best || m > best_m) {
                    best = u;
                    best_m = m;
                }
            }
            return best;
        };

        if (ctx.rules.strict_transmitter) {
            auto u = first.empty() ? pick(rest, nullptr) : pick(first, nullptr);
            if (!u) continue;
            for (int r = 0; r < n_rbs; ++r) a.add({bs, s.user_endpoint(*u), r});
            continue;
        }

        std::vector<Bits> left(s.n_users(), 0);
        for (auto u : cell[b]) left[u] = backlog(s, u);
        for (int r = 0; r < n_rbs; ++r) {
            auto u = pick(first, &left);
            if (!u) u = pick(rest, &left);
            if (!u) break;
            a.add({bs, s.user_endpoint(*u), r});
            left[*u] -= std::max<Bits>(rate[*u], 1);
        }
    }
    return a;
}

PfScheduler::PfScheduler(PfConfig cfg, std::uint32_t n_users) : cfg_(cfg), state_(n_users, cfg) {}

void PfScheduler::refresh(const LinkBudget& lb) { assoc_ = associate_all(lb, cfg_.cre_bias_db); }

Action PfScheduler::schedule(const SystemState& s, const RadioContext& ctx) const {
    return pf_schedule(s, ctx, assoc_, state_, cfg_);
}

}  // namespace d2dsim
