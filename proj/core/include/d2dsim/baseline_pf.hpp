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

#include <optional>
#include <vector>

#include "d2dsim/adp_scheduler.hpp"
#include "d2dsim/config.hpp"
#include "d2dsim/radio.hpp"
#include "d2dsim/state.hpp"
#include "d2dsim/transfer.hpp"

namespace d2dsim {

/// Strongest biased pilot among the BSs covering `user`; ties to the lowest
/// id. std::nullopt when no BS covers the user.
std::optional<EndpointId> associate_cre(EndpointId user, const LinkBudget& lb, double cre_bias_db);

/// True if `user` is attached to a micro only thanks to the range-expansion
/// bias, i.e. without it a macro would win.
bool is_cre_expanded(EndpointId user, const LinkBudget& lb, double cre_bias_db);

bool abs_muted(Step k, const PfConfig& cfg);

struct Association {
    std::vector<std::optional<EndpointId>> serving;  // per UE index
    std::vector<bool> expanded;
};

Association associate_all(const LinkBudget& lb, double cre_bias_db);

class PfState {
   public:
    PfState() = default;
    PfState(std::uint32_t n_users, const PfConfig& cfg);

    double avg_rate(std::uint32_t u) const { return avg_[u]; }
    std::span<const double> avg_rates() const { return avg_; }

    /// avg <- (1 - 1/W) avg + r / W with r the bits received this step,
    /// floored at the configured epsilon.
    void update(const SystemState& s, const TransferResult& chi);

   private:
    std::vector<double> avg_;
    double window_ = 100.0;
    double floor_ = 1.0;
};

/// Per-BS proportional fairness against the CRE association. Macros stay
/// silent on ABS-muted steps; micros then serve their range-expanded users
/// first. Users are ranked on their interference-free rate.
Action pf_schedule(const SystemState& s, const RadioContext& ctx, const Association& assoc, const PfState& pf,
                   const PfConfig& cfg);

class PfScheduler {
   public:
    PfScheduler(PfConfig cfg, std::uint32_t n_users);

    /// Recomputes the association; call whenever the link budget changes.
    void refresh(const LinkBudget& lb);

    Action schedule(const SystemState& s, const RadioContext& ctx) const;
    void observe(const SystemState& s, const TransferResult& chi) { state_.update(s, chi); }

    const PfState& state() const { return state_; }
    const Association& association() const { return assoc_; }
    const PfConfig& config() const { return cfg_; }

   private:
    PfConfig cfg_;
    PfState state_;
    Association assoc_;
};

}  // namespace d2dsim
