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

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "d2dsim/config.hpp"
#include "d2dsim/types.hpp"

namespace d2dsim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2, Vec2) = default;
};

double distance(Vec2 a, Vec2 b);

struct Endpoint {
    EndpointId id;
    EndpointKind kind;
    Vec2 position;
    double antenna_height_m;
    double tx_power_dbm;
    // Macro site index for sectors; cluster (micro index) for clustered UEs.
    std::optional<std::uint32_t> group;
};

using Rng = std::mt19937_64;

/// Network geometry plus the mobility RNG stream.
struct Scenario {
    std::vector<Endpoint> endpoints;
    std::vector<Vec2> site_positions;
    std::uint32_t n_macro = 0;
    std::uint32_t n_micro = 0;
    std::uint32_t n_ue = 0;
    double area_km2 = 0.0;
    double micro_coverage_radius_m = 0.0;
    Rng rng;

    std::uint32_t first_ue() const { return n_macro + n_micro; }
    std::uint32_t n_bs() const { return n_macro + n_micro; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(endpoints.size()); }
    EndpointKind kind(EndpointId e) const { return endpoints[to_index(e)].kind; }
    EndpointId ue(std::uint32_t ue_index) const { return endpoint_id(first_ue() + ue_index); }

    std::vector<Vec2> positions() const;
};

/// Builds the hexagonal macro layout, places micro BSs with non-overlapping
/// coverage discs, and drops users. Throws PlacementError if the micro layout
/// cannot be satisfied within `placement_retries` attempts per micro.
Scenario build_scenario(const ScenarioConfig& cfg);

/// True if `p` lies in the hexagonal cell of some macro site.
bool in_network_area(const Scenario& sc, const ScenarioConfig& cfg, Vec2 p);

LinkClass link_class(EndpointKind tx, EndpointKind rx);

/// Path loss in dB. Antenna heights and carrier are folded into the per-class
/// coefficients of `model`.
double path_loss(const PropagationModel& model, double distance_m);
double path_loss(const ScenarioConfig& cfg, LinkClass cls, double distance_m);

/// Distance at which a transmitter at `tx_dbm` drops to the coverage threshold.
double coverage_radius(const PropagationModel& model, double tx_dbm, double threshold_dbm);

/// Per-step radio inputs. Rows are transmitters (every endpoint), columns are
/// receivers (UEs only: downlink and D2D both terminate at a UE).
class LinkBudget {
   public:
    LinkBudget() = default;
    LinkBudget(std::vector<EndpointKind> kinds, std::uint32_t first_ue, double noise_w);

    std::uint32_t n_endpoints() const { return static_cast<std::uint32_t>(kinds_.size()); }
    std::uint32_t n_ue() const { return n_ue_; }
    std::uint32_t first_ue() const { return first_ue_; }
    EndpointKind kind(EndpointId e) const { return kinds_[to_index(e)]; }
    bool is_ue(EndpointId e) const { return to_index(e) >= first_ue_; }
    std::uint32_t ue_index(EndpointId e) const { return to_index(e) - first_ue_; }
    double noise_w() const { return noise_w_; }

    /// Transmit power in watts of `tx` toward UE `rx`.
    double power(EndpointId tx, EndpointId rx) const { return power_[slot(tx, rx)]; }
    /// Linear attenuation >= 1, or +inf for "no path".
    double attenuation(EndpointId tx, EndpointId rx) const { return atten_[slot(tx, rx)]; }
    bool coverage(EndpointId tx, EndpointId rx) const { return coverage_[slot(tx, rx)] != 0; }
    /// Received pilot / signal power in dBm (-inf without a path).
    double received_dbm(EndpointId tx, EndpointId rx) const;

    /// Transmitters covering UE `rx`, ascending id.
    std::span<const EndpointId> covering(EndpointId rx) const { return covering_[ue_index(rx)]; }

    void set(EndpointId tx, EndpointId rx, double power_w, double attenuation, bool covered);
    /// Rebuilds the covering lists; call after the last set().
    void finalize();

   private:
    std::size_t slot(EndpointId tx, EndpointId rx) const {
        return static_cast<std::size_t>(to_index(tx)) * n_ue_ + (to_index(rx) - first_ue_);
    }

    std::vector<EndpointKind> kinds_;
    std::uint32_t first_ue_ = 0;
    std::uint32_t n_ue_ = 0;
    double noise_w_ = 0.0;
    std::vector<double> power_;
    std::vector<double> atten_;
    std::vector<std::uint8_t> coverage_;
    std::vector<std::vector<EndpointId>> covering_;
};

LinkBudget compute_link_budget(const Scenario& sc, std::span<const Vec2> positions,
                               const ScenarioConfig& cfg);

/// Advances every user by `dt_steps` 1 ms steps of a bounded random walk.
/// Clustered users stay inside their cluster disc; the rest stay inside the
/// network area.
void step_mobility(const Scenario& sc, std::vector<Vec2>& positions, Step dt_steps,
                   const ScenarioConfig& cfg, Rng& rng);

}  // namespace d2dsim
