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
#include <string>
#include <string_view>
#include <vector>

#include "d2dsim/adp_scheduler.hpp"
#include "d2dsim/baseline_pf.hpp"
#include "d2dsim/config.hpp"
#include "d2dsim/metrics.hpp"
#include "d2dsim/scenario.hpp"
#include "d2dsim/workload.hpp"

namespace d2dsim {

enum class SchedulerKind { Adp, Pf };

std::string_view to_string(SchedulerKind k);
SchedulerKind parse_scheduler(std::string_view name);

/// What a step looked like, handed to observers after transfers are applied.
struct StepView {
    Step step;
    SchedulerKind scheduler;
    const SystemState& before;  // after reveal and reap, before transfers
    const SystemState& after;
    const RadioContext& radio;
    const Action& action;
    const DeltaMap& delta;
    const TransferResult& transfers;
    const MappingResult* mapping;  // ADP only
    const StepMetrics& metrics;
};

class StepObserver {
   public:
    virtual ~StepObserver() = default;
    virtual void on_step(const StepView& v) = 0;
};

struct RunResult {
    SchedulerKind scheduler = SchedulerKind::Adp;
    std::vector<StepMetrics> metrics;
    Summary summary;
    // Empty unless invariant checking found a problem.
    std::vector<std::string> violations;
    double scheduler_seconds = 0.0;
};

/// Geometry, catalog and request list shared by every run of one seed.
struct Instance {
    SimConfig config;
    Scenario scenario;
    std::shared_ptr<const Catalog> catalog;
    Workload workload;
};

/// Validates the config, then builds the scenario and the workload from
/// config.scenario.seed.
Instance make_instance(const SimConfig& cfg);

RateTable make_rate_table(const RadioConfig& cfg);

/// Advances the instance for config.engine.steps steps under one scheduler.
/// The instance is not modified, so the same instance can be run under both
/// schedulers with identical geometry, mobility and requests.
RunResult run(const Instance& inst, SchedulerKind kind, StepObserver* observer = nullptr);

/// Per-step structural checks: action validity, per-pair transfer
/// bounds, h monotone and bounded by the item size, positive deadline slack
/// for every active duplet, no D2D under PF, and for ADP that the mapping's
/// rates equal a full recomputation. With `replay`, also that replaying the
/// accepted triplets strictly increases the network total at each step.
/// Returns one description per failed check.
std::vector<std::string> check_step(const StepView& v, bool replay);

}  // namespace d2dsim
