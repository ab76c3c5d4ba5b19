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

#include "d2dsim/engine.hpp"

#include <chrono>
#include <optional>

#include <fmt/format.h>

#include "d2dsim/error.hpp"
#include "d2dsim/radio.hpp"

namespace d2dsim {

std::string_view to_string(SchedulerKind k) { return k == SchedulerKind::Adp ? "adp" : "pf"; }

SchedulerKind parse_scheduler(std::string_view name) {
    if (name == "adp") return SchedulerKind::Adp;
    if (name == "pf") return SchedulerKind::Pf;
    throw ConfigError(fmt::format("unknown scheduler '{}'", name));
}

RateTable make_rate_table(const RadioConfig& cfg) {
    if (cfg.rate_table_path.empty()) return RateTable::default_table(cfg.max_bits_per_rb);
    return RateTable::load(cfg.rate_table_path, cfg.max_bits_per_rb);
}

Instance make_instance(const SimConfig& cfg) {
    validate(cfg);
    Instance inst{cfg, build_scenario(cfg.scenario), std::make_shared<const Catalog>(Catalog::from_config(cfg.workload)),
                  {}};
    auto rng = workload_rng(cfg.scenario.seed);
    inst.workload = generate_workload(cfg.workload, *inst.catalog, inst.scenario.n_ue, rng);
    return inst;
}

std::vector<std::string> check_step(const StepView& v, bool replay) {
    std::vector<std::string> out;
    const auto& lb = v.radio.lb;
    const auto& before = v.before;
    const auto& after = v.after;
    const Step k = v.step;

    if (auto err = check_action(v.action, lb, v.radio.rules)) out.push_back(fmt::format("step {}: {}", k, *err));
    if (v.scheduler == SchedulerKind::Pf) {
        for (const auto& t : v.action) {
            if (lb.is_ue(t.tx)) {
                out.push_back(fmt::format("step {}: D2D triplet under PF", k));
                break;
            }
        }
    }

    std::vector<Bits> carried(v.action.size(), 0);
    for (const auto& y : v.transfers.y) carried[y.triplet] += y.bits;
    for (std::size_t i = 0; i < v.action.size(); ++i) {
        if (carried[i] > v.delta[i]) out.push_back(fmt::format("step {}: triplet {} carries more than its rate", k, i));
    }
    for (const auto& c : v.transfers.chi) {
        const auto u = before.user_index(c.rx);
        const Bits bound = before.held(c.tx, c.content) - before.duplet(u, c.content).downloaded;
        if (c.bits <= 0 || c.bits > bound) {
            out.push_back(fmt::format("step {}: transfer {}->{} of item {} exceeds {} bits", k, to_index(c.tx),
                                      to_index(c.rx), to_index(c.content), bound));
        }
    }

    const auto& cat = before.catalog();
    for (std::uint32_t u = 0; u < before.n_users(); ++u) {
        for (const auto& item : cat.items) {
            const auto& d0 = before.duplet(u, item.id);
            const auto& d1 = after.duplet(u, item.id);
            if (d1.downloaded < d0.downloaded || d1.downloaded > item.size_bits) {
                out.push_back(fmt::format("step {}: user {} item {} progress {} -> {}", k, u, to_index(item.id),
                                          d0.downloaded, d1.downloaded));
            }
        }
        for (ContentId c : before.active(u)) {
            const auto& d = before.duplet(u, c);
            if (d.want > k) out.push_back(fmt::format("step {}: user {} knows a future want-time", k, u));
            if (d.want + cat[c].deadline_steps - k <= 0) {
                out.push_back(fmt::format("step {}: user {} item {} has no deadline slack", k, u, to_index(c)));
            }
        }
    }

    if (v.mapping) {
        if (v.mapping->delta != v.delta) out.push_back(fmt::format("step {}: mapping rates differ from recomputation", k));
        if (v.mapping->transfers.total() != v.transfers.total()) {
            out.push_back(fmt::format("step {}: mapping total differs from recomputation", k));
        }
        if (replay) {
            const auto totals = replay_gains(v.action, before, v.radio);
            Bits prev = 0;
            for (std::size_t i = 0; i < totals.size(); ++i) {
                if (totals[i] <= prev) {
                    out.push_back(fmt::format("step {}: acceptance {} did not increase the total", k, i));
                    break;
                }
                prev = totals[i];
            }
            if (totals != v.mapping->accepted_totals) {
                out.push_back(fmt::format("step {}: replayed totals differ from the mapping's", k));
            }
        }
    }
    return out;
}

RunResult run(const Instance& inst, SchedulerKind kind, StepObserver* observer) {
    const auto& cfg = inst.config;
    validate(cfg);
    const Step steps = cfg.engine.steps;

    Scenario sc = inst.scenario;
    auto positions = sc.positions();
    const RateTable table = make_rate_table(cfg.radio);
    const double noise_w = dbm_to_watts(cfg.scenario.noise_dbm_per_rb);
    LinkBudget lb = compute_link_budget(sc, positions, cfg.scenario);
    const ActionRules rules{cfg.scenario.n_rbs, cfg.adp.strict_transmitter};
    const EnergyModel energy(cfg.energy, cfg.scenario.n_rbs);

    std::optional<AdpScheduler> adp;
    std::optional<PfScheduler> pf;
    if (kind == SchedulerKind::Adp) {
        adp.emplace(cfg.adp, cfg.scenario.n_rbs);
    } else {
        pf.emplace(cfg.pf, sc.n_ue);
        pf->refresh(lb);
    }

    SystemState s(inst.catalog, sc.n_ue, sc.first_ue());
    const auto& reqs = inst.workload.requests;
    std::size_t next = 0;
    const bool watch = cfg.engine.check_invariants || observer != nullptr;

    RunResult result;
    result.scheduler = kind;
    result.metrics.reserve(static_cast<std::size_t>(steps));
    for (Step k = 0; k < steps; ++k) {
        s.set_step(k);
        StepMetrics m;
        m.step = k;
        for (; next < reqs.size() && reqs[next].want <= k; ++next) {
            s.reveal(reqs[next].user, reqs[next].content, reqs[next].want);
            ++m.revealed[static_cast<std::size_t>(category_slot(s.catalog()[reqs[next].content].category))];
        }
        for (const auto& f : s.reap_expired()) m.failures.push_back({f.user, f.content, s.catalog()[f.content].category});

        const RadioContext ctx{lb, table, noise_w, rules};
        const auto t0 = std::chrono::steady_clock::now();
        Action a;
        std::optional<Selection> sel;
        if (adp) {
            sel = adp->schedule(s, ctx);
            a = sel->action;
        } else {
            a = pf->schedule(s, ctx);
        }
        result.scheduler_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        const DeltaMap delta = compute_delta(a, lb, noise_w, table);
        const TransferResult chi = compute_chi(a, delta, s);
        std::optional<SystemState> before;
        if (watch) before = s;
        for (const auto& d : apply_transfers(s, chi)) {
            const auto& item = s.catalog()[d.content];
            m.completions.push_back({d.user, d.content, item.category, k - s.duplet(d.user, d.content).want});
        }
        if (pf) pf->observe(s, chi);

        m.energy_j = energy.step_energy(a, lb);
        record_transfers(m, a, delta, chi, lb, s.catalog());
        m.active = s.n_active();

        if (watch) {
            const StepView view{k, kind, *before, s, ctx, a, delta, chi, sel ? &sel->mapping : nullptr, m};
            if (cfg.engine.check_invariants) {
                auto found = check_step(view, cfg.engine.check_monotone_gain);
                result.violations.insert(result.violations.end(), found.begin(), found.end());
            }
            if (observer) observer->on_step(view);
        }
        result.metrics.push_back(std::move(m));

        const Step period = cfg.engine.refresh_period;
        if (period > 0 && (k + 1) % period == 0 && k + 1 < steps) {
            step_mobility(sc, positions, period, cfg.scenario, sc.rng);
            lb = compute_link_budget(sc, positions, cfg.scenario);
            if (pf) pf->refresh(lb);
        }
    }
    result.summary = summarize(result.metrics);
    return result;
}

}  // namespace d2dsim
