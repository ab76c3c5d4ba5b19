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

#include <cmath>
#include <limits>
#include <random>

#include "d2dsim/baseline_pf.hpp"
#include "d2dsim/error.hpp"
#include "d2dsim/transfer.hpp"
#include "fixtures.hpp"

using namespace d2dsim;
using fixture::Bench;
using fixture::empty_budget;
using fixture::small_catalog;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

EndpointId ep(std::uint32_t i) { return endpoint_id(i); }

// 1 W transmitter received at `rx_dbm`.
void pilot(LinkBudget& lb, std::uint32_t tx, std::uint32_t rx, double rx_dbm, bool covered = true) {
    lb.set(ep(tx), ep(rx), 1.0, std::pow(10.0, (30.0 - rx_dbm) / 10.0), covered);
}

// Macro 0, micro 1, UEs 2 and 3, all links finite unless set otherwise.
Bench two_cell() {
    Bench b;
    b.noise_w = 1e-13;
    b.rules.n_rbs = 4;
    b.lb = empty_budget(1, 1, 2, b.noise_w);
    for (std::uint32_t t = 0; t < 4; ++t)
        for (std::uint32_t r = 2; r < 4; ++r)
            if (t != r) b.lb.set(ep(t), ep(r), 1.0, kInf, false);
    b.catalog = small_catalog({{1'000'000, 1000}});
    b.state = SystemState(b.catalog, 2, 2);
    b.state.set_step(3);
    b.state.reveal(0, content_id(0), 0);
    b.state.reveal(1, content_id(0), 0);
    return b;
}

}  // namespace

TEST(Cre, BiasTurnsWeakerMicroIntoServer) {
    auto b = two_cell();
    pilot(b.lb, 0, 2, -70.0);
    pilot(b.lb, 1, 2, -80.0);
    b.lb.finalize();
    EXPECT_NEAR(b.lb.received_dbm(ep(1), ep(2)), -80.0, 1e-9);
    EXPECT_EQ(associate_cre(ep(2), b.lb, 15.0), ep(1));
    EXPECT_TRUE(is_cre_expanded(ep(2), b.lb, 15.0));
    EXPECT_EQ(associate_cre(ep(2), b.lb, 0.0), ep(0));
    EXPECT_FALSE(is_cre_expanded(ep(2), b.lb, 0.0));
    EXPECT_EQ(associate_cre(ep(2), b.lb, 5.0), ep(0));
}

TEST(Cre, SingleOrNoCoveringBs) {
    auto b = two_cell();
    pilot(b.lb, 1, 2, -90.0);
    pilot(b.lb, 0, 2, -50.0, false);
    b.lb.finalize();
    EXPECT_EQ(associate_cre(ep(2), b.lb, 15.0), ep(1));
    EXPECT_FALSE(is_cre_expanded(ep(2), b.lb, 15.0));
    EXPECT_EQ(associate_cre(ep(3), b.lb, 15.0), std::nullopt);
}

TEST(Cre, UesAreNotServers) {
    auto b = two_cell();
    pilot(b.lb, 3, 2, -40.0);
    pilot(b.lb, 0, 2, -95.0);
    b.lb.finalize();
    EXPECT_EQ(associate_cre(ep(2), b.lb, 15.0), ep(0));
}

TEST(Abs, MutedEveryPeriod) {
    PfConfig cfg;
    EXPECT_TRUE(abs_muted(0, cfg));
    EXPECT_FALSE(abs_muted(1, cfg));
    EXPECT_TRUE(abs_muted(2, cfg));
    cfg.abs_offset = 1;
    EXPECT_FALSE(abs_muted(0, cfg));
    EXPECT_TRUE(abs_muted(1, cfg));
    cfg.abs_period = 0;
    for (Step k = 0; k < 10; ++k) EXPECT_FALSE(abs_muted(k, cfg));
    cfg.abs_period = 4;
    cfg.abs_offset = 0;
    int muted = 0;
    for (Step k = 0; k < 400; ++k) muted += abs_muted(k, cfg);
    EXPECT_EQ(muted, 100);
}

TEST(PfSchedule, LoneUserGetsEveryRb) {
    auto b = two_cell();
    pilot(b.lb, 0, 2, -60.0);
    b.lb.finalize();
    const PfConfig cfg;
    const auto assoc = associate_all(b.lb, cfg.cre_bias_db);
    const PfState pf(2, cfg);
    b.state.set_step(3);
    const auto a = pf_schedule(b.state, b.ctx(), assoc, pf, cfg);
    ASSERT_EQ(a.size(), 4u);
    for (int r = 0; r < 4; ++r) EXPECT_EQ(a.triplets[static_cast<std::size_t>(r)], (Transmission{ep(0), ep(2), r}));
}

TEST(PfSchedule, MacroSilentOnMutedStep) {
    auto b = two_cell();
    pilot(b.lb, 0, 2, -60.0);
    pilot(b.lb, 1, 3, -60.0);
    b.lb.finalize();
    const PfConfig cfg;
    const auto assoc = associate_all(b.lb, cfg.cre_bias_db);
    const PfState pf(2, cfg);
    b.state.set_step(4);
    ASSERT_TRUE(abs_muted(4, cfg));
    const auto a = pf_schedule(b.state, b.ctx(), assoc, pf, cfg);
    EXPECT_FALSE(a.empty());
    for (const auto& t : a) EXPECT_NE(b.lb.kind(t.tx), EndpointKind::MacroBS);
    b.state.set_step(5);
    const auto open = pf_schedule(b.state, b.ctx(), assoc, pf, cfg);
    EXPECT_TRUE(std::any_of(open.begin(), open.end(), [&](const Transmission& t) { return t.tx == ep(0); }));
}

TEST(PfSchedule, ExpandedUsersServedFirstOnMutedStep) {
    auto b = two_cell();
    pilot(b.lb, 0, 2, -70.0);
    pilot(b.lb, 1, 2, -84.0);  // expanded
    pilot(b.lb, 1, 3, -50.0);  // micro-native, better channel
    b.lb.finalize();
    const PfConfig cfg;
    const auto assoc = associate_all(b.lb, cfg.cre_bias_db);
    ASSERT_TRUE(assoc.expanded[0]);
    ASSERT_FALSE(assoc.expanded[1]);
    const PfState pf(2, cfg);
    b.state.set_step(4);
    const auto muted = pf_schedule(b.state, b.ctx(), assoc, pf, cfg);
    ASSERT_FALSE(muted.empty());
    EXPECT_EQ(muted.triplets[0].rx, ep(2));
    b.state.set_step(5);
    const auto open = pf_schedule(b.state, b.ctx(), assoc, pf, cfg);
    ASSERT_FALSE(open.empty());
    EXPECT_EQ(open.triplets[0].rx, ep(3));
}

TEST(PfSchedule, BetterChannelWinsAtEqualAverage) {
    auto b = two_cell();
    pilot(b.lb, 0, 2, -60.0);
    pilot(b.lb, 0, 3, -90.0);
    b.lb.finalize();
    PfConfig cfg;
    cfg.abs_period = 0;
    const auto assoc = associate_all(b.lb, cfg.cre_bias_db);
    const PfState pf(2, cfg);
    ASSERT_EQ(pf.avg_rate(0), pf.avg_rate(1));
    const auto a = pf_schedule(b.state, b.ctx(), assoc, pf, cfg);
    ASSERT_FALSE(a.empty());
    for (const auto& t : a) EXPECT_EQ(t.rx, ep(2));
}

TEST(PfSchedule, ServedUserYieldsOnceItsAverageGrows) {
    auto b = two_cell();
    pilot(b.lb, 0, 2, -60.0);
    pilot(b.lb, 0, 3, -75.0);
    b.lb.finalize();
    PfConfig cfg;
    cfg.abs_period = 0;
    PfScheduler sched(cfg, 2);
    sched.refresh(b.lb);
    bool second_served = false;
    for (Step k = 3; k < 60 && !second_served; ++k) {
        b.state.set_step(k);
        const auto a = sched.schedule(b.state, b.ctx());
        ASSERT_FALSE(check_action(a, b.lb, b.rules).has_value());
        const auto d = compute_delta(a, b.lb, b.noise_w, b.table);
        const auto chi = compute_chi(a, d, b.state);
        apply_transfers(b.state, chi);
        sched.observe(b.state, chi);
        second_served = std::any_of(a.begin(), a.end(), [](const Transmission& t) { return t.rx == ep(3); });
    }
    EXPECT_TRUE(second_served);
}

TEST(PfSchedule, NoUeTransmitters) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto b = fixture::toy(rng);
        for (bool strict : {true, false}) {
            b.rules.strict_transmitter = strict;
            PfConfig cfg;
            const auto assoc = associate_all(b.lb, cfg.cre_bias_db);
            const PfState pf(b.state.n_users(), cfg);
            for (Step k : {4, 5}) {
                b.state.set_step(k);
                const auto a = pf_schedule(b.state, b.ctx(), assoc, pf, cfg);
                EXPECT_FALSE(check_action(a, b.lb, b.rules).has_value());
                for (const auto& t : a) EXPECT_TRUE(is_bs(b.lb.kind(t.tx)));
            }
        }
    }
}

TEST(PfState, EwmaUpdateAndFloor) {
    PfConfig cfg;
    cfg.ewma_window = 4;
    cfg.avg_rate_floor = 0.5;
    auto b = two_cell();
    b.lb.finalize();
    PfState pf(2, cfg);
    EXPECT_EQ(pf.avg_rate(0), 0.5);
    TransferResult chi;
    chi.chi.push_back({ep(0), ep(2), content_id(0), 400});
    pf.update(b.state, chi);
    EXPECT_DOUBLE_EQ(pf.avg_rate(0), 0.75 * 0.5 + 100.0);
    EXPECT_EQ(pf.avg_rate(1), 0.5);
    for (int i = 0; i < 200; ++i) pf.update(b.state, {});
    EXPECT_EQ(pf.avg_rate(0), 0.5);
}

TEST(PfState, StaysWithinBounds) {
    PfConfig cfg;
    auto b = two_cell();
    b.lb.finalize();
    PfState pf(2, cfg);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<Bits> bits(0, 40'000);
    for (int i = 0; i < 1000; ++i) {
        TransferResult chi;
        chi.chi.push_back({ep(0), ep(2), content_id(0), bits(rng)});
        pf.update(b.state, chi);
        EXPECT_GE(pf.avg_rate(0), cfg.avg_rate_floor);
        EXPECT_LE(pf.avg_rate(0), 40'000.0);
    }
}

TEST(PfState, RejectsBadConfig) {
    PfConfig cfg;
    cfg.ewma_window = 0;
    EXPECT_THROW(PfState(1, cfg), ConfigError);
    cfg.ewma_window = 10;
    cfg.avg_rate_floor = 0.0;
    EXPECT_THROW(PfState(1, cfg), ConfigError);
}
