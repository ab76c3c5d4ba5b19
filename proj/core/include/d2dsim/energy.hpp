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

#include "d2dsim/config.hpp"
#include "d2dsim/radio.hpp"

namespace d2dsim {

using KindArray = std::array<double, kNumKinds>;

/// Linear load-dependent node power: p0 + slope * radiated watts, where the
/// radiated power of a transmitter is its per-RB power times the fraction of
/// RBs it occupies. One step lasts 1 ms.
class EnergyModel {
   public:
    EnergyModel(EnergyConfig cfg, int n_rbs);

    /// Joules consumed in one step, by endpoint kind.
    KindArray step_energy(const Action& a, const LinkBudget& lb) const;

    double node_power_w(EndpointKind kind, bool active, double radiated_w) const;

    const EnergyConfig& config() const { return cfg_; }

   private:
    const EnergyCoefficients& coeff(EndpointKind k) const;

    EnergyConfig cfg_;
    int n_rbs_;
};

}  // namespace d2dsim
