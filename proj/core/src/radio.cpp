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

#include "d2dsim/radio.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "d2dsim/error.hpp"

namespace d2dsim {

std::optional<std::string> check_action(const Action& a, const LinkBudget& lb, const ActionRules& rules) {
    std::unordered_map<std::uint32_t, std::uint32_t> source_of;  // rx -> tx
    std::unordered_map<std::uint32_t, std::uint32_t> sink_of;    // tx -> rx
    std::unordered_set<std::uint64_t> tx_rb;
    for (const auto& t : a) {
        const auto tx = to_index(t.tx);
        const auto rx = to_index(t.rx);
        if (t.rb < 0 || t.rb >= rules.n_rbs) return "rb out of range: " + std::to_string(t.rb);
        if (tx == rx) return "tx equals rx: " + std::to_string(tx);
        if (tx >= lb.n_endpoints() || rx >= lb.n_endpoints()) return "unknown endpoint";
        if (!lb.is_ue(t.rx)) return "receiver is not a UE: " + std::to_string(rx);
        if (auto [it, fresh] = source_of.try_emplace(rx, tx); !fresh && it->second != tx) {
            return "receiver " + std::to_string(rx) + " served by two sources";
        }
        if (!tx_rb.insert((static_cast<std::uint64_t>(tx) << 32) | static_cast<std::uint32_t>(t.rb)).second) {
            return "tx " + std::to_string(tx) + " uses rb " + std::to_string(t.rb) + " twice";
        }
        if (auto [it, fresh] = sink_of.try_emplace(tx, rx); !fresh && it->second != rx && rules.strict_transmitter) {
            return "tx " + std::to_string(tx) + " serves more than one receiver";
        }
    }
    for (const auto& [tx, rx] : sink_of) {
        if (source_of.contains(tx)) return "endpoint " + std::to_string(tx) + " transmits and receives";
    }
    return std::nullopt;
}

double interference(const Action& a, const LinkBudget& lb, int rb, EndpointId victim) {
    double sum = 0.0;
    for (const auto& t : a) {
        if (t.rb != rb || t.tx == victim || t.rx == victim) continue;
        const double att = lb.attenuation(t.tx, victim);
        if (std::isfinite(att)) sum += lb.power(t.tx, t.rx) / att;
    }
    return sum;
}

double sinr(const LinkBudget& lb, EndpointId tx, EndpointId rx, double noise_w, double interference_w) {
    const double att = lb.attenuation(tx, rx);
    if (!std::isfinite(att) || !(att > 0.0)) {
        throw ModelError("no propagation path from " + std::to_string(to_index(tx)) + " to " +
                         std::to_string(to_index(rx)));
    }
    return lb.power(tx, rx) / (att * (noise_w + interference_w));
}

DeltaMap compute_delta(const Action& a, const LinkBudget& lb, double noise_w, const RateTable& table) {
    const auto n = a.triplets.size();
    std::unordered_map<int, std::vector<std::size_t>> by_rb;
    for (std::size_t i = 0; i < n; ++i) by_rb[a.triplets[i].rb].push_back(i);

    // Phase 1: every triplet adds its power at the receivers sharing its RB.
    std::vector<double> interf(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& src = a.triplets[j];
        const double p = lb.power(src.tx, src.rx);
        for (std::size_t i : by_rb[src.rb]) {
            if (i == j) continue;
            const EndpointId victim = a.triplets[i].rx;
            if (victim == src.tx || victim == src.rx) continue;
            const double att = lb.attenuation(src.tx, victim);
            if (std::isfinite(att)) interf[i] += p / att;
        }
    }

    // Phase 2: SINR and rate per triplet.
    DeltaMap delta(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& t = a.triplets[i];
        if (!lb.coverage(t.tx, t.rx)) continue;
        delta[i] = sinr_to_delta(sinr(lb, t.tx, t.rx, noise_w, interf[i]), table);
    }
    return delta;
}

}  // namespace d2dsim
