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

#include <benchmark/benchmark.h>

#include <map>
#include <optional>

#include "d2dsim/adp_scheduler.hpp"
#include "d2dsim/engine.hpp"

namespace {

using namespace d2dsim;

// State and radio as the ADP scheduler saw them at one step of a desk run.
struct Snapshot {
    SystemState state;
    LinkBudget lb;
    RateTable table;
    double noise_w = 0.0;
    ActionRules rules;

    RadioContext ctx() const { return RadioContext{lb, table, noise_w, rules}; }
};

class Capture final : public StepObserver {
   public:
    explicit Capture(Step at) : at_(at) {}
    void on_step(const StepView& v) override {
        if (v.step != at_) return;
        snap = Snapshot{v.before, v.radio.lb, v.radio.table, v.radio.noise_w, v.radio.rules};
    }
    std::optional<Snapshot> snap;

   private:
    Step at_;
};

SimConfig desk_config(int users) {
    SimConfig cfg = make_preset(Preset::Desk);
    cfg.scenario.n_users = users;
    cfg.engine.check_invariants = false;
    return cfg;
}

// Step 55 sits inside the viral flash crowd.
const Snapshot& snapshot(int users) {
    static std::map<int, Snapshot> cache;
    auto it = cache.find(users);
    if (it == cache.end()) {
        SimConfig cfg = desk_config(users);
        cfg.engine.steps = 56;
        Capture cap(55);
        run(make_instance(cfg), SchedulerKind::Adp, &cap);
        it = cache.emplace(users, std::move(*cap.snap)).first;
    }
    return it->second;
}

MappingOptions desk_options(const Snapshot& s) {
    return mapping_options(make_preset(Preset::Desk).adp, s.rules.n_rbs);
}

void BM_MapAlpha(benchmark::State& st) {
    const auto& s = snapshot(static_cast<int>(st.range(0)));
    const auto ctx = s.ctx();
    const auto opts = desk_options(s);
    for (auto _ : st) benchmark::DoNotOptimize(map_alpha_to_action({0.5, 1.0, 1.0}, s.state, ctx, opts));
}
BENCHMARK(BM_MapAlpha)->Arg(20)->Arg(60)->Arg(160)->Unit(benchmark::kMicrosecond);

void BM_ComputeDelta(benchmark::State& st) {
    const auto& s = snapshot(static_cast<int>(st.range(0)));
    const auto ctx = s.ctx();
    const auto m = map_alpha_to_action({1.0, 1.0, 1.0}, s.state, ctx, desk_options(s));
    for (auto _ : st) benchmark::DoNotOptimize(compute_delta(m.action, s.lb, s.noise_w, s.table));
    st.counters["triplets"] = static_cast<double>(m.action.size());
}
BENCHMARK(BM_ComputeDelta)->Arg(20)->Arg(60)->Arg(160)->Unit(benchmark::kMicrosecond);

void BM_ComputeChi(benchmark::State& st) {
    const auto& s = snapshot(static_cast<int>(st.range(0)));
    const auto ctx = s.ctx();
    const auto m = map_alpha_to_action({1.0, 1.0, 1.0}, s.state, ctx, desk_options(s));
    for (auto _ : st) benchmark::DoNotOptimize(compute_chi(m.action, m.delta, s.state));
}
BENCHMARK(BM_ComputeChi)->Arg(20)->Arg(60)->Arg(160)->Unit(benchmark::kMicrosecond);

void BM_SelectAction(benchmark::State& st) {
    const auto& s = snapshot(60);
    const auto ctx = s.ctx();
    const auto opts = desk_options(s);
    const auto alphas = enumerate_auxiliary_actions(0.5);
    const PersistenceForecaster f;
    const int horizon = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(select_action(s.state, ctx, alphas, horizon, opts, f));
}
BENCHMARK(BM_SelectAction)->Arg(0)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_SelectActionReference(benchmark::State& st) {
    const auto& s = snapshot(60);
    const auto ctx = s.ctx();
    const auto opts = desk_options(s);
    const auto alphas = enumerate_auxiliary_actions(0.5);
    const PersistenceForecaster f;
    for (auto _ : st) benchmark::DoNotOptimize(select_action_reference(s.state, ctx, alphas, 10, opts, f));
}
BENCHMARK(BM_SelectActionReference)->Unit(benchmark::kMillisecond);

void BM_RunSteps(benchmark::State& st) {
    SimConfig cfg = desk_config(60);
    cfg.engine.steps = 200;
    const auto inst = make_instance(cfg);
    const auto kind = st.range(0) == 0 ? SchedulerKind::Adp : SchedulerKind::Pf;
    for (auto _ : st) benchmark::DoNotOptimize(run(inst, kind));
    st.SetLabel(std::string(to_string(kind)));
    st.SetItemsProcessed(st.iterations() * cfg.engine.steps);
}
BENCHMARK(BM_RunSteps)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
