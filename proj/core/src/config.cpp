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

#include "d2dsim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "d2dsim/error.hpp"

namespace d2dsim {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view v) {
    T out{};
    const auto* end = v.data() + v.size();
    auto [p, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || p != end) throw ConfigError(fmt::format("bad value '{}' for {}", v, key));
    return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
    if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "off" || v == "no") return false;
    throw ConfigError(fmt::format("bad boolean '{}' for {}", v, key));
}

struct Field {
    std::function<std::string(const SimConfig&)> get;
    std::function<void(SimConfig&, std::string_view key, std::string_view value)> set;
};

template <class Ref>
Field field(Ref ref) {
    using T = std::remove_cvref_t<decltype(ref(std::declval<SimConfig&>()))>;
    Field f;
    f.get = [ref](const SimConfig& c) {
        auto& v = ref(const_cast<SimConfig&>(c));
        if constexpr (std::is_same_v<T, bool>) return std::string(v ? "true" : "false");
        else return fmt::format("{}", v);
    };
    f.set = [ref](SimConfig& c, std::string_view key, std::string_view value) {
        auto& v = ref(c);
        if constexpr (std::is_same_v<T, bool>) v = parse_bool(key, value);
        else if constexpr (std::is_same_v<T, std::string>) v = std::string(value);
        else v = parse_number<T>(key, value);
    };
    return f;
}

#define D2D_FIELD(key, expr) m.emplace(key, field([](SimConfig& c) -> auto& { return expr; }))

void add_propagation(std::map<std::string, Field, std::less<>>& m, const std::string& prefix,
                     PropagationModel ScenarioConfig::*model) {
    m.emplace(prefix + ".l0_db", field([model](SimConfig& c) -> auto& { return (c.scenario.*model).l0_db; }));
    m.emplace(prefix + ".exponent", field([model](SimConfig& c) -> auto& { return (c.scenario.*model).exponent; }));
    m.emplace(prefix + ".d0_m", field([model](SimConfig& c) -> auto& { return (c.scenario.*model).d0_m; }));
    m.emplace(prefix + ".d_min_m", field([model](SimConfig& c) -> auto& { return (c.scenario.*model).d_min_m; }));
}

void add_node(std::map<std::string, Field, std::less<>>& m, const std::string& prefix, NodeDefaults ScenarioConfig::*node) {
    m.emplace(prefix + ".tx_power_dbm", field([node](SimConfig& c) -> auto& { return (c.scenario.*node).tx_power_dbm; }));
    m.emplace(prefix + ".antenna_height_m",
              field([node](SimConfig& c) -> auto& { return (c.scenario.*node).antenna_height_m; }));
}

void add_energy(std::map<std::string, Field, std::less<>>& m, const std::string& prefix,
                EnergyCoefficients EnergyConfig::*e) {
    m.emplace(prefix + ".p0_w", field([e](SimConfig& c) -> auto& { return (c.energy.*e).p0_w; }));
    m.emplace(prefix + ".delta_p", field([e](SimConfig& c) -> auto& { return (c.energy.*e).delta_p; }));
}

void add_category(std::map<std::string, Field, std::less<>>& m, ContentCategory cat) {
    const auto i = static_cast<std::size_t>(category_slot(cat));
    const std::string p = fmt::format("workload.{}", to_string(cat));
    m.emplace(p + ".items", field([i](SimConfig& c) -> auto& { return c.workload.categories[i].items; }));
    m.emplace(p + ".size_bits", field([i](SimConfig& c) -> auto& { return c.workload.categories[i].size_bits; }));
    m.emplace(p + ".deadline_steps",
              field([i](SimConfig& c) -> auto& { return c.workload.categories[i].deadline_steps; }));
    m.emplace(p + ".request_first",
              field([i](SimConfig& c) -> auto& { return c.workload.categories[i].request_first; }));
    m.emplace(p + ".request_last", field([i](SimConfig& c) -> auto& { return c.workload.categories[i].request_last; }));
    m.emplace(p + ".mix_weight", field([i](SimConfig& c) -> auto& { return c.workload.categories[i].mix_weight; }));
}

const std::map<std::string, Field, std::less<>>& registry() {
    static const auto table = [] {
        std::map<std::string, Field, std::less<>> m;
        D2D_FIELD("scenario.n_macro_sites", c.scenario.n_macro_sites);
        D2D_FIELD("scenario.sectors_per_site", c.scenario.sectors_per_site);
        D2D_FIELD("scenario.inter_site_distance_m", c.scenario.inter_site_distance_m);
        D2D_FIELD("scenario.n_micro_per_macro", c.scenario.n_micro_per_macro);
        D2D_FIELD("scenario.n_users", c.scenario.n_users);
        D2D_FIELD("scenario.users_per_micro_cluster", c.scenario.users_per_micro_cluster);
        D2D_FIELD("scenario.cluster_radius_m", c.scenario.cluster_radius_m);
        D2D_FIELD("scenario.band_mhz", c.scenario.band_mhz);
        D2D_FIELD("scenario.carrier_ghz", c.scenario.carrier_ghz);
        D2D_FIELD("scenario.n_rbs", c.scenario.n_rbs);
        D2D_FIELD("scenario.noise_dbm_per_rb", c.scenario.noise_dbm_per_rb);
        D2D_FIELD("scenario.coverage_threshold_dbm", c.scenario.coverage_threshold_dbm);
        D2D_FIELD("scenario.user_speed_mps", c.scenario.user_speed_mps);
        D2D_FIELD("scenario.seed", c.scenario.seed);
        add_node(m, "scenario.macro", &ScenarioConfig::macro);
        add_node(m, "scenario.micro", &ScenarioConfig::micro);
        add_node(m, "scenario.ue", &ScenarioConfig::ue);
        D2D_FIELD("scenario.micro_min_macro_distance_m", c.scenario.micro_min_macro_distance_m);
        D2D_FIELD("scenario.placement_retries", c.scenario.placement_retries);
        add_propagation(m, "scenario.macro_ue", &ScenarioConfig::macro_ue);
        add_propagation(m, "scenario.micro_ue", &ScenarioConfig::micro_ue);
        add_propagation(m, "scenario.ue_ue", &ScenarioConfig::ue_ue);
        D2D_FIELD("scenario.d2d_power_control", c.scenario.d2d_power_control);
        D2D_FIELD("scenario.d2d_target_rx_dbm", c.scenario.d2d_target_rx_dbm);

        D2D_FIELD("radio.rate_table_path", c.radio.rate_table_path);
        D2D_FIELD("radio.max_bits_per_rb", c.radio.max_bits_per_rb);

        D2D_FIELD("adp.alpha_granularity", c.adp.alpha_granularity);
        D2D_FIELD("adp.horizon", c.adp.horizon);
        D2D_FIELD("adp.strict_transmitter", c.adp.strict_transmitter);
        D2D_FIELD("adp.multi_rb", c.adp.multi_rb);
        D2D_FIELD("adp.max_rb_sweeps", c.adp.max_rb_sweeps);
        D2D_FIELD("adp.include_zero_alpha", c.adp.include_zero_alpha);

        D2D_FIELD("pf.cre_bias_db", c.pf.cre_bias_db);
        D2D_FIELD("pf.abs_period", c.pf.abs_period);
        D2D_FIELD("pf.abs_offset", c.pf.abs_offset);
        D2D_FIELD("pf.ewma_window", c.pf.ewma_window);
        D2D_FIELD("pf.avg_rate_floor", c.pf.avg_rate_floor);

        add_energy(m, "energy.macro", &EnergyConfig::macro);
        add_energy(m, "energy.micro", &EnergyConfig::micro);
        add_energy(m, "energy.ue", &EnergyConfig::ue);
        D2D_FIELD("energy.bs_idle_consumes_p0", c.energy.bs_idle_consumes_p0);
        D2D_FIELD("energy.ue_idle_consumes_p0", c.energy.ue_idle_consumes_p0);

        D2D_FIELD("workload.requests_per_user", c.workload.requests_per_user);
        add_category(m, ContentCategory::Ebook);
        add_category(m, ContentCategory::Video);
        add_category(m, ContentCategory::Viral);

        D2D_FIELD("engine.steps", c.engine.steps);
        D2D_FIELD("engine.refresh_period", c.engine.refresh_period);
        D2D_FIELD("engine.check_invariants", c.engine.check_invariants);
        D2D_FIELD("engine.check_monotone_gain", c.engine.check_monotone_gain);
        return m;
    }();
    return table;
}

#undef D2D_FIELD

}  // namespace

Preset parse_preset(std::string_view name) {
    if (name == "desk") return Preset::Desk;
    if (name == "paper-scale" || name == "full-scale") return Preset::FullScale;
    throw ConfigError(fmt::format("unknown preset '{}' (expected desk or paper-scale)", name));
}

SimConfig make_preset(Preset p) {
    SimConfig c;
    // Desk: one three-sector site, 4 micros, 60 users.
    c.adp.alpha_granularity = 0.5;
    c.adp.horizon = 10;
    c.adp.multi_rb = true;
    if (p == Preset::FullScale) {
        c.scenario.n_macro_sites = 19;
        c.scenario.n_micro_per_macro = 12;
        c.scenario.n_users = 3420;
        c.adp.alpha_granularity = 0.1;
        c.adp.horizon = 50;
    }
    return c;
}

void validate(const SimConfig& c) {
    const auto& s = c.scenario;
    auto need = [](bool ok, std::string_view what) {
        if (!ok) throw ConfigError(std::string(what));
    };
    need(s.n_macro_sites >= 1, "scenario.n_macro_sites must be >= 1");
    need(s.sectors_per_site >= 1, "scenario.sectors_per_site must be >= 1");
    need(s.inter_site_distance_m > 0.0, "scenario.inter_site_distance_m must be > 0");
    need(s.n_micro_per_macro >= 0, "scenario.n_micro_per_macro must be >= 0");
    need(s.n_users >= 0, "scenario.n_users must be >= 0");
    need(s.users_per_micro_cluster >= 0, "scenario.users_per_micro_cluster must be >= 0");
    need(s.cluster_radius_m > 0.0, "scenario.cluster_radius_m must be > 0");
    need(s.n_rbs >= 1, "scenario.n_rbs must be >= 1");
    need(s.user_speed_mps >= 0.0, "scenario.user_speed_mps must be >= 0");
    need(s.placement_retries >= 1, "scenario.placement_retries must be >= 1");
    need(s.micro_min_macro_distance_m >= 0.0, "scenario.micro_min_macro_distance_m must be >= 0");
    for (const auto* m : {&s.macro_ue, &s.micro_ue, &s.ue_ue}) {
        need(m->exponent >= 0.0 && m->d0_m > 0.0 && m->d_min_m > 0.0, "propagation model needs n >= 0, d0 > 0, d_min > 0");
    }
    need(c.radio.max_bits_per_rb >= 1, "radio.max_bits_per_rb must be >= 1");
    need(c.adp.alpha_granularity > 0.0 && c.adp.alpha_granularity <= 1.0, "adp.alpha_granularity must be in (0, 1]");
    {
        const double n = 1.0 / c.adp.alpha_granularity;
        need(std::abs(n - std::round(n)) <= 1e-9 * n, "1 / adp.alpha_granularity must be an integer");
    }
    need(c.adp.horizon >= 0, "adp.horizon must be >= 0");
    need(c.adp.max_rb_sweeps >= 0, "adp.max_rb_sweeps must be >= 0");
    need(c.pf.cre_bias_db >= 0.0, "pf.cre_bias_db must be >= 0");
    need(c.pf.abs_period >= 0, "pf.abs_period must be >= 0 (0 disables muting)");
    need(c.pf.ewma_window >= 1, "pf.ewma_window must be >= 1");
    need(c.pf.avg_rate_floor > 0.0, "pf.avg_rate_floor must be > 0");
    for (const auto* e : {&c.energy.macro, &c.energy.micro, &c.energy.ue}) {
        need(e->p0_w >= 0.0 && e->delta_p >= 0.0, "energy coefficients must be >= 0");
    }
    need(c.workload.requests_per_user >= 0, "workload.requests_per_user must be >= 0");
    double weight = 0.0;
    for (const auto& cat : c.workload.categories) {
        need(cat.items >= 0, "category items must be >= 0");
        need(cat.size_bits >= 1, "category size_bits must be >= 1");
        need(cat.deadline_steps >= 1, "category deadline_steps must be >= 1");
        need(cat.request_first >= 0 && cat.request_first <= cat.request_last, "category request interval is empty");
        need(cat.mix_weight >= 0.0, "category mix_weight must be >= 0");
        if (cat.items > 0) weight += cat.mix_weight;
    }
    need(c.workload.requests_per_user == 0 || weight > 0.0, "workload mix has no positive weight");
    need(c.engine.steps >= 1, "engine.steps must be >= 1");
    need(c.engine.refresh_period >= 0, "engine.refresh_period must be >= 0");
}

void set_config_value(SimConfig& cfg, std::string_view key, std::string_view value) {
    const auto& reg = registry();
    const auto it = reg.find(key);
    if (it == reg.end()) throw ConfigError(fmt::format("unknown config key '{}'", key));
    it->second.set(cfg, key, value);
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto& [k, f] : registry()) keys.push_back(k);
    return keys;
}

SimConfig parse_config(std::string_view text, const SimConfig& base) {
    SimConfig cfg = base;
    bool header = false;
    bool any_key = false;
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos && header) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (!header) {
            if (line != kConfigHeader) {
                throw ConfigError(fmt::format("line {}: expected header '{}'", line_no, kConfigHeader));
            }
            header = true;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(fmt::format("line {}: expected key = value", line_no));
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "preset") {
            if (any_key) throw ConfigError(fmt::format("line {}: preset must precede other keys", line_no));
            cfg = make_preset(parse_preset(value));
        } else {
            try {
                set_config_value(cfg, key, value);
            } catch (const ConfigError& e) {
                throw ConfigError(fmt::format("line {}: {}", line_no, e.what()));
            }
        }
        any_key = true;
    }
    if (!header) throw ConfigError(fmt::format("missing header '{}'", kConfigHeader));
    return cfg;
}

SimConfig load_config(const std::filesystem::path& path, const SimConfig& base) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot read config '{}'", path.string()));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), base);
}

std::string dump_config(const SimConfig& cfg) {
    std::string out = std::string(kConfigHeader) + "\n";
    for (const auto& [k, f] : registry()) out += fmt::format("{} = {}\n", k, f.get(cfg));
    return out;
}

}  // namespace d2dsim
