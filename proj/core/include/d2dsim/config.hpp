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
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "d2dsim/types.hpp"

namespace d2dsim {

/// Log-distance model: L0 + 10 n log10(max(d, d_min) / d0), in dB.
struct PropagationModel {
    double l0_db;
    double exponent;
    double d0_m;
    double d_min_m;
};

enum class LinkClass : std::uint8_t { MacroToUe, MicroToUe, UeToUe };

struct NodeDefaults {
    double tx_power_dbm;
    double antenna_height_m;
};

struct ScenarioConfig {
    int n_macro_sites = 1;
    int sectors_per_site = 3;
    double inter_site_distance_m = 500.0;
    // Micro BSs per macro site (not per sector).
    int n_micro_per_macro = 4;
    int n_users = 60;
    int users_per_micro_cluster = 10;
    double cluster_radius_m = 50.0;
    double band_mhz = 10.0;
    double carrier_ghz = 2.6;
    int n_rbs = 50;
    // -174 dBm/Hz + 10 log10(180 kHz) + 9 dB noise figure.
    double noise_dbm_per_rb = -112.447;
    double coverage_threshold_dbm = -70.0;
    double user_speed_mps = 1.0;
    std::uint64_t seed = 1;

    NodeDefaults macro{43.0, 25.0};
    NodeDefaults micro{30.0, 10.0};
    NodeDefaults ue{23.0, 1.5};

    double micro_min_macro_distance_m = 75.0;
    int placement_retries = 1000;

    // "3GPP-flavored" defaults. Macro: 128.1 + 37.6 log10(R km). Micro: pico
    // slope with an offset giving a ~52 m coverage disc at 30 dBm / -70 dBm.
    // UE-UE: outdoor NLOS at 1.5 m antenna height, 2.6 GHz.
    PropagationModel macro_ue{128.1, 3.76, 1000.0, 35.0};
    PropagationModel micro_ue{147.0, 3.67, 1000.0, 10.0};
    PropagationModel ue_ue{28.95, 4.375, 1.0, 3.0};

    // D2D closed-loop power: min(ue tx power, target + path loss) when enabled.
    bool d2d_power_control = false;
    double d2d_target_rx_dbm = -60.0;

    const PropagationModel& model(LinkClass c) const {
        switch (c) {
            case LinkClass::MacroToUe: return macro_ue;
            case LinkClass::MicroToUe: return micro_ue;
            case LinkClass::UeToUe: return ue_ue;
        }
        return ue_ue;
    }
};

struct RadioConfig {
    // Empty means the built-in CQI-style table.
    std::string rate_table_path;
    Bits max_bits_per_rb = 712;
};

struct AdpConfig {
    double alpha_granularity = 0.1;
    int horizon = 50;
    bool strict_transmitter = true;
    bool multi_rb = false;
    // Upper bound on mapping sweeps when multi_rb is on; 0 means n_rbs.
    int max_rb_sweeps = 0;
    // Adds alpha = 0 to the grid (bans a paradigm).
    bool include_zero_alpha = false;
};

struct PfConfig {
    double cre_bias_db = 15.0;
    int abs_period = 2;
    int abs_offset = 0;
    int ewma_window = 100;
    double avg_rate_floor = 1.0;
};

struct EnergyCoefficients {
    double p0_w;
    double delta_p;
};

struct EnergyConfig {
    EnergyCoefficients macro{130.0, 4.7};
    EnergyCoefficients micro{56.0, 2.6};
    EnergyCoefficients ue{0.1, 8.0};
    bool bs_idle_consumes_p0 = true;
    bool ue_idle_consumes_p0 = false;
};

struct CategorySpec {
    int items;
    Bits size_bits;
    Step deadline_steps;
    Step request_first;
    Step request_last;
    double mix_weight;
};

struct WorkloadConfig {
    int requests_per_user = 1;
    // Indexed by ContentCategory.
    std::array<CategorySpec, kNumCategories> categories{{
        {10, 12'000'000, 4000, 1, 1000, 1.0},
        {10, 3'000'000, 1000, 1, 1000, 1.0},
        {1, 3'000'000, 1000, 41, 60, 1.0},
    }};
};

struct EngineConfig {
    Step steps = 5000;
    Step refresh_period = 100;
    bool check_invariants = true;
    // Replays every ADP mapping from scratch; quadratic in the action size.
    bool check_monotone_gain = false;
};

struct SimConfig {
    ScenarioConfig scenario;
    RadioConfig radio;
    AdpConfig adp;
    PfConfig pf;
    EnergyConfig energy;
    WorkloadConfig workload;
    EngineConfig engine;
};

enum class Preset { Desk, FullScale };

Preset parse_preset(std::string_view name);
SimConfig make_preset(Preset p);

/// Throws ConfigError on the first inconsistency found.
void validate(const SimConfig& cfg);

inline constexpr std::string_view kConfigHeader = "d2dsim-config v1";

/// Parses a `key = value` document whose first non-empty line is the
/// versioned header. Keys override `base`; a `preset` key, if present, must
/// come first and replaces `base` entirely.
SimConfig parse_config(std::string_view text, const SimConfig& base = {});
SimConfig load_config(const std::filesystem::path& path, const SimConfig& base = {});

/// Renders every key with its current value; parse_config(dump_config(c)) == c.
std::string dump_config(const SimConfig& cfg);

/// Applies a single `key = value` override.
void set_config_value(SimConfig& cfg, std::string_view key, std::string_view value);

std::vector<std::string> config_keys();

}  // namespace d2dsim
