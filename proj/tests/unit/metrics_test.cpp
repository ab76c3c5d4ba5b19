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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "d2dsim/energy.hpp"
#include "d2dsim/metrics.hpp"
#include "d2dsim/workload.hpp"
#include "fixtures.hpp"

using namespace d2dsim;

namespace {

StepMetrics step(Step k, Bits macro_bits, Bits ue_bits, double energy) {
    StepMetrics m;
    m.step = k;
    m.bits[kind_slot(EndpointKind::MacroBS)][category_slot(ContentCategory::Video)] = macro_bits;
    m.bits[kind_slot(EndpointKind::UE)][category_slot(ContentCategory::Viral)] = ue_bits;
    m.energy_j[kind_slot(EndpointKind::MacroBS)] = energy;
    m.rbs_used = 2;
    m.distinct_rbs = 1;
    m.bits_per_rb = static_cast<double>(macro_bits + ue_bits) / 2.0;
    m.rb_reuse = 2.0;
    return m;
}

}  // namespace

TEST(Workload, ZeroRateIsEmpty) {
    WorkloadConfig cfg;
    cfg.requests_per_user = 0;
    const auto cat = Catalog::from_config(cfg);
    auto rng = workload_rng(1);
    EXPECT_TRUE(generate_workload(cfg, cat, 50, rng).requests.empty());
}

TEST(Workload, CategoryIntervalsRespected) {
    WorkloadConfig cfg;
    cfg.requests_per_user = 3;
    const auto cat = Catalog::from_config(cfg);
    auto rng = workload_rng(7);
    const auto w = generate_workload(cfg, cat, 500, rng);
    int viral = 0;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& r : w.requests) {
        const auto& item = cat[r.content];
        const auto& spec = cfg.categories[static_cast<std::size_t>(category_slot(item.category))];
        EXPECT_GE(r.want, spec.request_first);
        EXPECT_LE(r.want, spec.request_last);
        viral += item.category == ContentCategory::Viral;
        EXPECT_TRUE(seen.emplace(r.user, to_index(r.content)).second);
    }
    EXPECT_GT(viral, 0);
    EXPECT_TRUE(std::is_sorted(w.requests.begin(), w.requests.end(), [](const Request& a, const Request& b) {
        return std::tie(a.want, a.user) < std::tie(b.want, b.user);
    }));
}

TEST(Workload, Deterministic) {
    const WorkloadConfig cfg;
    const auto cat = Catalog::from_config(cfg);
    auto r1 = workload_rng(9);
    auto r2 = workload_rng(9);
    EXPECT_EQ(generate_workload(cfg, cat, 60, r1).requests, generate_workload(cfg, cat, 60, r2).requests);
}

TEST(Workload, DefaultCatalogMatchesTable) {
    const auto cat = Catalog::from_config(WorkloadConfig{});
    ASSERT_EQ(cat.size(), 21u);
    EXPECT_EQ(cat.items[0].category, ContentCategory::Ebook);
    EXPECT_EQ(cat.items[0].size_bits, 12'000'000);
    EXPECT_EQ(cat.items[0].deadline_steps, 4000);
    EXPECT_EQ(cat.items[10].category, ContentCategory::Video);
    EXPECT_EQ(cat.items[20].category, ContentCategory::Viral);
    EXPECT_EQ(cat.items[20].size_bits, 3'000'000);
}

TEST(Energy, IdleAndActive) {
    auto lb = fixture::empty_budget(1, 1, 3, 1e-13);
    std::mt19937_64 rng(1);
    fixture::randomize(lb, rng);
    const EnergyConfig cfg;
    const EnergyModel model(cfg, 4);
    const auto idle = model.step_energy({}, lb);
    EXPECT_DOUBLE_EQ(idle[0], 130.0e-3);
    EXPECT_DOUBLE_EQ(idle[1], 56.0e-3);
    EXPECT_EQ(idle[2], 0.0);

    Action a;
    a.add({endpoint_id(0), endpoint_id(2), 0});
    a.add({endpoint_id(0), endpoint_id(2), 1});
    a.add({endpoint_id(4), endpoint_id(3), 0});
    const auto e = model.step_energy(a, lb);
    const double macro_w = 130.0 + 4.7 * (2.0 * lb.power(endpoint_id(0), endpoint_id(2)) / 4.0);
    const double ue_w = 0.1 + 8.0 * (lb.power(endpoint_id(4), endpoint_id(3)) / 4.0);
    EXPECT_DOUBLE_EQ(e[0], macro_w * 1e-3);
    EXPECT_DOUBLE_EQ(e[1], 56.0e-3);
    EXPECT_DOUBLE_EQ(e[2], ue_w * 1e-3);
}

TEST(Energy, IdleFlags) {
    EnergyConfig cfg;
    cfg.bs_idle_consumes_p0 = false;
    cfg.ue_idle_consumes_p0 = true;
    const EnergyModel model(cfg, 50);
    EXPECT_EQ(model.node_power_w(EndpointKind::MacroBS, false, 0.0), 0.0);
    EXPECT_EQ(model.node_power_w(EndpointKind::UE, false, 0.0), 0.1);
    EXPECT_DOUBLE_EQ(model.node_power_w(EndpointKind::MicroBS, true, 1.0), 58.6);
}

TEST(Metrics, RecordTransfers) {
    std::mt19937_64 rng(4);
    auto b = fixture::toy(rng);
    Action a;
    a.add({endpoint_id(0), endpoint_id(3), 0});
    a.add({endpoint_id(0), endpoint_id(3), 1});
    a.add({endpoint_id(1), endpoint_id(4), 1});
    const DeltaMap delta{300, 0, 100};
    TransferResult chi;
    chi.chi.push_back({endpoint_id(0), endpoint_id(3), content_id(0), 250});
    chi.chi.push_back({endpoint_id(1), endpoint_id(4), content_id(1), 100});
    StepMetrics m;
    record_transfers(m, a, delta, chi, b.lb, *b.catalog);
    EXPECT_EQ(m.bits[0][0], 250);
    EXPECT_EQ(m.bits[1][1], 100);
    EXPECT_EQ(m.total_bits(), 350);
    EXPECT_EQ(m.rbs_used, 2);
    EXPECT_EQ(m.distinct_rbs, 2);
    EXPECT_DOUBLE_EQ(m.bits_per_rb, 175.0);
    EXPECT_DOUBLE_EQ(m.rb_reuse, 1.0);
}

TEST(Summary, EmptyStreamThrows) { EXPECT_THROW(summarize({}), std::invalid_argument); }

TEST(Summary, SingleStepEqualsThatStep) {
    std::vector<StepMetrics> s{step(0, 500, 100, 2.0)};
    s[0].revealed[1] = 1;
    s[0].completions.push_back({0, content_id(3), ContentCategory::Video, 17});
    const auto sum = summarize(s);
    EXPECT_EQ(sum.steps, 1);
    EXPECT_EQ(sum.total_bits, 600);
    EXPECT_EQ(sum.bits[0], 500.0);
    EXPECT_EQ(sum.bits[2], 100.0);
    EXPECT_DOUBLE_EQ(sum.total_energy_j, 2.0);
    EXPECT_DOUBLE_EQ(*sum.total_energy_per_bit, 2.0 / 600.0);
    EXPECT_DOUBLE_EQ(*sum.mean_bits_per_rb, 300.0);
    EXPECT_DOUBLE_EQ(*sum.mean_rb_reuse, 2.0);
    EXPECT_EQ(sum.completed, 1);
    const auto& v = sum.categories[1];
    EXPECT_EQ(v.requests, 1);
    EXPECT_EQ(*v.completion_p50, 17);
    EXPECT_EQ(*v.completion_max, 17);
}

TEST(Summary, TwoStepsAggregate) {
    std::vector<StepMetrics> s{step(0, 500, 100, 2.0), step(1, 300, 0, 3.0)};
    s[0].revealed[1] = 3;
    s[1].revealed[2] = 1;
    s[0].completions.push_back({0, content_id(3), ContentCategory::Video, 40});
    s[1].completions.push_back({1, content_id(3), ContentCategory::Video, 10});
    s[1].completions.push_back({2, content_id(4), ContentCategory::Video, 30});
    s[1].failures.push_back({3, content_id(20), ContentCategory::Viral});
    const auto sum = summarize(s);
    EXPECT_EQ(sum.total_bits, 900);
    EXPECT_DOUBLE_EQ(sum.total_energy_j, 5.0);
    EXPECT_EQ(sum.requests, 4);
    EXPECT_EQ(sum.completed, 3);
    EXPECT_EQ(sum.failed, 1);
    EXPECT_EQ(sum.still_active, 0);
    const auto& v = sum.categories[1];
    EXPECT_EQ(*v.completion_p50, 30);
    EXPECT_EQ(*v.completion_p90, 40);
    EXPECT_EQ(*v.completion_max, 40);
    EXPECT_DOUBLE_EQ(*v.completion_mean, 80.0 / 3.0);
    EXPECT_EQ(sum.categories[2].failed, 1);
    EXPECT_EQ(sum.categories[2].bits_d2d, 100);
    EXPECT_DOUBLE_EQ(sum.d2d_share(ContentCategory::Viral), 1.0);
    EXPECT_DOUBLE_EQ(sum.d2d_share(ContentCategory::Video), 0.0);
    EXPECT_DOUBLE_EQ(*sum.mean_bits_per_rb, 900.0 / 4.0);
}

TEST(Summary, NearestRank) {
    const std::vector<Step> v{10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
    EXPECT_EQ(nearest_rank(v, 50.0), 50);
    EXPECT_EQ(nearest_rank(v, 90.0), 90);
    EXPECT_EQ(nearest_rank(v, 91.0), 100);
    EXPECT_EQ(nearest_rank(v, 100.0), 100);
    EXPECT_EQ(nearest_rank(v, 1.0), 10);
    const std::vector<Step> one{7};
    EXPECT_EQ(nearest_rank(one, 50.0), 7);
}

TEST(Summary, ZeroBitsGivesUndefinedEnergyPerBit) {
    std::vector<StepMetrics> s{step(0, 0, 0, 4.0)};
    s[0].rbs_used = 0;
    s[0].distinct_rbs = 0;
    const auto sum = summarize(s);
    EXPECT_FALSE(sum.total_energy_per_bit.has_value());
    for (const auto& e : sum.energy_per_bit) EXPECT_FALSE(e.has_value());
    const auto j = to_json(sum);
    EXPECT_TRUE(j["total_energy_per_bit_j"].is_null());
    EXPECT_EQ(j["schema_version"], kSummarySchemaVersion);
    EXPECT_EQ(j.dump().find("inf"), std::string::npos);
    EXPECT_EQ(j.dump().find("nan"), std::string::npos);
}

TEST(Summary, MeanRbMetricsSkipIdleSteps) {
    std::vector<StepMetrics> s{step(0, 400, 0, 1.0), step(1, 0, 0, 1.0)};
    s[1].rbs_used = 0;
    s[1].distinct_rbs = 0;
    s[1].bits_per_rb = 0.0;
    s[1].rb_reuse = 0.0;
    const auto sum = summarize(s);
    EXPECT_DOUBLE_EQ(*sum.mean_bits_per_rb, 200.0);
    EXPECT_DOUBLE_EQ(*sum.mean_rb_reuse, 2.0);
}

TEST(Metrics, CsvShape) {
    std::vector<StepMetrics> s{step(0, 1, 2, 0.5), step(1, 3, 4, 0.25)};
    s[1].completions.push_back({0, content_id(3), ContentCategory::Video, 9});
    std::ostringstream os;
    write_metrics(os, s);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, kMetricsHeader);
    std::getline(in, line);
    const auto cols = std::count(line.begin(), line.end(), ',');
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), cols);
    }
    EXPECT_EQ(rows, 2);
    std::ostringstream ev;
    write_events(ev, s);
    EXPECT_EQ(ev.str().rfind("# d2dsim-events v1", 0), 0u);
    EXPECT_NE(ev.str().find("video"), std::string::npos);
}
