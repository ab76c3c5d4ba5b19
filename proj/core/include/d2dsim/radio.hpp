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

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "d2dsim/rate_table.hpp"
#include "d2dsim/scenario.hpp"
#include "d2dsim/types.hpp"

namespace d2dsim {

/// One (transmitter, receiver, RB) triplet.
struct Transmission {
    EndpointId tx;
    EndpointId rx;
    int rb;

    friend auto operator<=>(const Transmission&, const Transmission&) = default;
};

/// Resource allocation for one step. Triplets keep insertion order; the ADP
/// mapping appends them in acceptance order.
struct Action {
    std::vector<Transmission> triplets;

    bool empty() const { return triplets.empty(); }
    std::size_t size() const { return triplets.size(); }
    auto begin() const { return triplets.begin(); }
    auto end() const { return triplets.end(); }
    void add(Transmission t) { triplets.push_back(t); }

    friend bool operator==(const Action&, const Action&) = default;
};

/// Potential bits per triplet, aligned with Action::triplets.
using DeltaMap = std::vector<Bits>;

struct ActionRules {
    int n_rbs = 50;
    // Each transmitter serves a single receiver across all of its RBs.
    bool strict_transmitter = true;
};

/// Returns a description of the first violated structural constraint, if any:
/// rb range, tx != rx, rx is a UE, single source per receiver, half duplex,
/// (tx, rb) uniqueness, strict transmitter.
std::optional<std::string> check_action(const Action& a, const LinkBudget& lb, const ActionRules& rules);

/// Interference at `victim` on `rb` from every triplet of `a` except those
/// that involve the victim.
double interference(const Action& a, const LinkBudget& lb, int rb, EndpointId victim);

/// P(tx,rx) / (A(tx,rx) (N + I)). Throws ModelError without a finite path.
double sinr(const LinkBudget& lb, EndpointId tx, EndpointId rx, double noise_w, double interference_w);

/// Two-phase evaluation: co-channel interference at every receiver first,
/// then SINR and rate lookup per triplet. Uncovered triplets get zero.
DeltaMap compute_delta(const Action& a, const LinkBudget& lb, double noise_w, const RateTable& table);

}  // namespace d2dsim
