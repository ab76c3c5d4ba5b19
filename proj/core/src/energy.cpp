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

#include "d2dsim/energy.hpp"

#include <vector>

#include "d2dsim/error.hpp"

namespace d2dsim {

EnergyModel::EnergyModel(EnergyConfig cfg, int n_rbs) : cfg_(cfg), n_rbs_(n_rbs) {
    if (n_rbs < 1) throw ConfigError("n_rbs must be >= 1");
    for (auto k : {EndpointKind::MacroBS, EndpointKind::MicroBS, EndpointKind::UE}) {
        if (coeff(k).p0_w < 0.0 || coeff(k).delta_p < 0.0) throw ConfigError("energy coefficients must be >= 0");
    }
}

const EnergyCoefficients& EnergyModel::coeff(EndpointKind k) const {
    switch (k) {
        case EndpointKind::MacroBS: return cfg_.macro;
        case EndpointKind::MicroBS: return cfg_.micro;
        case EndpointKind::UE: return cfg_.ue;
    }
    return cfg_.ue;
}

double EnergyModel::node_power_w(EndpointKind kind, bool active, double radiated_w) const {
    const auto& c = coeff(kind);
    if (active) return c.p0_w + c.delta_p * radiated_w;
    const bool idle_p0 = is_bs(kind) ? cfg_.bs_idle_consumes_p0 : cfg_.ue_idle_consumes_p0;
    return idle_p0 ? c.p0_w : 0.0;
}

KindArray EnergyModel::step_energy(const Action& a, const LinkBudget& lb) const {
    std::vector<double> radiated(lb.n_endpoints(), 0.0);
    std::vector<std::uint8_t> active(lb.n_endpoints(), 0);
    for (const auto& t : a) {
        radiated[to_index(t.tx)] += lb.power(t.tx, t.rx) / n_rbs_;
        active[to_index(t.tx)] = 1;
    }
    KindArray out{};
    for (std::uint32_t e = 0; e < lb.n_endpoints(); ++e) {
        const auto kind = lb.kind(endpoint_id(e));
        out[static_cast<std::size_t>(kind_slot(kind))] +=
            node_power_w(kind, active[e] != 0, radiated[e]) * kStepSeconds;
    }
    return out;
}

}  // namespace d2dsim
