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
#include <compare>
#include <memory>
#include <span>
#include <vector>

#include "d2dsim/config.hpp"
#include "d2dsim/radio.hpp"
#include "d2dsim/state.hpp"
#include "d2dsim/transfer.hpp"

namespace d2dsim {

/// Everything the DP machinery needs to evaluate an action at one step.
struct RadioContext {
    const LinkBudget& lb;
    const RateTable& table;
    double noise_w;
    ActionRules rules;
};

/// Auxiliary action: per-paradigm weights for macro BSs, micro BSs and D2D.
struct AlphaTriplet {
    double macro = 1.0;
    double micro = 1.0;
    double ue = 1.0;

    double weight(EndpointKind k) const {
        switch (k) {
            case EndpointKind::MacroBS: return macro;
            case EndpointKind::MicroBS: return micro;
            case EndpointKind::UE: return ue;
        }
        return 0.0;
    }
    friend auto operator<=>(const AlphaTriplet&, const AlphaTriplet&) = default;
};

/// Full grid {g, 2g, ..., 1}^3 (optionally with 0) in lexicographic order.
/// Throws ConfigError unless 0 < g <= 1 and 1/g is integral.
std::vector<AlphaTriplet> enumerate_auxiliary_actions(double granularity, bool include_zero = false);

struct MappingOptions {
    // Keep sweeping the downloader list, granting extra RBs, until a sweep
    // accepts nothing or max_sweeps is reached.
    bool multi_rb = false;
    int max_sweeps = 1;
};

MappingOptions mapping_options(const AdpConfig& cfg, int n_rbs);

struct MappingResult {
    Action action;
    DeltaMap delta;
    TransferResult transfers;
    // Network total after each accepted triplet.
    std::vector<Bits> accepted_totals;

    // Per downloader visit: the first best-scoring candidate of each kind and
    // the candidate picked. Another alpha that picks the same candidate at
    // every visit produces the same mapping.
    struct Decision {
        struct Rep {
            std::int32_t order = -1;  // position in the covering list, -1 if absent
            Bits sum = 0;
        };
        std::array<Rep, kNumKinds> reps{};
        std::int32_t picked = -1;
    };
    std::vector<Decision> decisions;

    bool valid_for(const AlphaTriplet& other) const;
};

/// Serves downloaders oldest want-time first. For each, scores every eligible
/// (endpoint, RB) by the bits it would carry given the allocation so far,
/// weighted by the endpoint's alpha; takes the best endpoint and its best RB;
/// keeps the triplet only if the network total strictly increases. The
/// weight multiplies the integer sum over RBs, so endpoints of one kind are
/// ranked identically under every positive weight.
MappingResult map_alpha_to_action(const AlphaTriplet& alpha, const SystemState& s, const RadioContext& ctx,
                                  const MappingOptions& opts = {});

/// Sum over active duplets of residual bits after `chi` divided by the steps
/// left before the deadline. Throws InvariantViolation on a non-positive
/// denominator (expired duplets must be reaped first).
double immediate_cost(const SystemState& s, const TransferResult& chi);

struct ValueEstimate {
    double value = 0.0;
    int horizon_used = 0;
};

/// Predicts the actions of the next steps. Implementations must be
/// deterministic and must not inject future requests.
class ActionForecaster {
   public:
    virtual ~ActionForecaster() = default;
    virtual std::vector<Action> forecast(const SystemState& s, const Action& a, const TransferResult& chi,
                                         const AlphaTriplet& alpha, int horizon, const RadioContext& ctx,
                                         const MappingOptions& opts) const = 0;
};

/// Re-maps the same alpha-triplet against the rolled-forward state with the
/// link budget held fixed.
class PersistenceForecaster final : public ActionForecaster {
   public:
    std::vector<Action> forecast(const SystemState& s, const Action& a, const TransferResult& chi,
                                 const AlphaTriplet& alpha, int horizon, const RadioContext& ctx,
                                 const MappingOptions& opts) const override;
};

std::vector<Action> forecast_future_actions(const SystemState& s, const Action& a, const AlphaTriplet& alpha,
                                            int horizon, const RadioContext& ctx, const MappingOptions& opts = {});

/// Rolls the state through `a` and then `future`, recomputing rates and
/// transfers at each step, and sums the immediate cost of every future step.
ValueEstimate estimate_value(const SystemState& s, const Action& a, std::span<const Action> future,
                             const RadioContext& ctx);

struct Selection {
    Action action;
    MappingResult mapping;
    double cost = 0.0;
    double value = 0.0;
    AlphaTriplet alpha;
    std::size_t alpha_index = 0;
};

/// argmin of cost + value over the mapped auxiliary actions; ties go to the
/// earliest triplet in enumeration order. With the persistence forecaster,
/// triplets whose rollouts coincide are evaluated once; the result is the
/// same as select_action_reference.
Selection select_action(const SystemState& s, const RadioContext& ctx, std::span<const AlphaTriplet> alphas,
                        int horizon, const MappingOptions& opts, const ActionForecaster& forecaster);

/// Maps, forecasts and values every triplet independently.
Selection select_action_reference(const SystemState& s, const RadioContext& ctx,
                                  std::span<const AlphaTriplet> alphas, int horizon, const MappingOptions& opts,
                                  const ActionForecaster& forecaster);

/// Network totals of every prefix of `a`, recomputed from scratch.
std::vector<Bits> replay_gains(const Action& a, const SystemState& s, const RadioContext& ctx);

class AdpScheduler {
   public:
    AdpScheduler(AdpConfig cfg, int n_rbs, std::shared_ptr<const ActionForecaster> forecaster = nullptr);

    Selection schedule(const SystemState& s, const RadioContext& ctx) const;

    const AdpConfig& config() const { return cfg_; }
    std::span<const AlphaTriplet> alphas() const { return alphas_; }

   private:
    AdpConfig cfg_;
    MappingOptions opts_;
    std::vector<AlphaTriplet> alphas_;
    std::shared_ptr<const ActionForecaster> forecaster_;
};

}  // namespace d2dsim
