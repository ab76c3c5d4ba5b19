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

#include "d2dsim/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "d2dsim/error.hpp"

namespace d2dsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Axial hex directions; ring k starts at k * dir[4] and walks each direction k times.
constexpr std::array<std::array<int, 2>, 6> kHexDirs{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

std::vector<Vec2> hex_sites(int n, double isd) {
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>(n));
    auto to_xy = [isd](int q, int r) {
        return Vec2{isd * (q + 0.5 * r), isd * (std::numbers::sqrt3 / 2.0) * r};
    };
    if (n > 0) out.push_back({0.0, 0.0});
    for (int ring = 1; static_cast<int>(out.size()) < n; ++ring) {
        int q = ring * kHexDirs[4][0];
        int r = ring * kHexDirs[4][1];
        for (int side = 0; side < 6 && static_cast<int>(out.size()) < n; ++side) {
            for (int s = 0; s < ring && static_cast<int>(out.size()) < n; ++s) {
                out.push_back(to_xy(q, r));
                q += kHexDirs[side][0];
                r += kHexDirs[side][1];
            }
        }
    }
    return out;
}

// Cell of a site: |d . n_i| <= isd/2 for the three neighbour normals.
bool in_hex(Vec2 d, double isd) {
    const double h = 0.5 * isd;
    const double c = 0.5;
    const double s = std::numbers::sqrt3 / 2.0;
    return std::abs(d.x) <= h && std::abs(c * d.x + s * d.y) <= h && std::abs(-c * d.x + s * d.y) <= h;
}

Vec2 uniform_in_hex(Vec2 center, double isd, Rng& rng) {
    std::uniform_real_distribution<double> ux(-0.5 * isd, 0.5 * isd);
    std::uniform_real_distribution<double> uy(-isd / std::numbers::sqrt3, isd / std::numbers::sqrt3);
    for (;;) {
        Vec2 d{ux(rng), uy(rng)};
        if (in_hex(d, isd)) return center + d;
    }
}

Vec2 uniform_in_disc(Vec2 center, double radius, Rng& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double rho = radius * std::sqrt(u01(rng));
    const double phi = 2.0 * std::numbers::pi * u01(rng);
    return center + Vec2{rho * std::cos(phi), rho * std::sin(phi)};
}

Endpoint make_endpoint(std::uint32_t idx, EndpointKind kind, Vec2 pos, const NodeDefaults& d,
                       std::optional<std::uint32_t> group) {
    return Endpoint{endpoint_id(idx), kind, pos, d.antenna_height_m, d.tx_power_dbm, group};
}

}  // namespace

double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::vector<Vec2> Scenario::positions() const {
    std::vector<Vec2> out;
    out.reserve(endpoints.size());
    for (const auto& e : endpoints) out.push_back(e.position);
    return out;
}

double path_loss(const PropagationModel& m, double distance_m) {
    const double d = std::max(distance_m, m.d_min_m);
    return m.l0_db + 10.0 * m.exponent * std::log10(d / m.d0_m);
}

double path_loss(const ScenarioConfig& cfg, LinkClass cls, double distance_m) {
    return path_loss(cfg.model(cls), distance_m);
}

double coverage_radius(const PropagationModel& m, double tx_dbm, double threshold_dbm) {
    const double budget = tx_dbm - threshold_dbm;
    const double d = m.d0_m * std::pow(10.0, (budget - m.l0_db) / (10.0 * m.exponent));
    return std::max(d, m.d_min_m);
}

LinkClass link_class(EndpointKind tx, EndpointKind rx) {
    if (rx != EndpointKind::UE) throw ModelError("links terminate at a UE");
    switch (tx) {
        case EndpointKind::MacroBS: return LinkClass::MacroToUe;
        case EndpointKind::MicroBS: return LinkClass::MicroToUe;
        case EndpointKind::UE: return LinkClass::UeToUe;
    }
    return LinkClass::UeToUe;
}

bool in_network_area(const Scenario& sc, const ScenarioConfig& cfg, Vec2 p) {
    return std::any_of(sc.site_positions.begin(), sc.site_positions.end(),
                       [&](Vec2 s) { return in_hex(p - s, cfg.inter_site_distance_m); });
}

Scenario build_scenario(const ScenarioConfig& cfg) {
    Scenario sc;
    sc.rng.seed(cfg.seed);
    Rng& rng = sc.rng;
    const double isd = cfg.inter_site_distance_m;

    sc.site_positions = hex_sites(cfg.n_macro_sites, isd);
    sc.area_km2 = cfg.n_macro_sites * (std::numbers::sqrt3 / 2.0) * isd * isd / 1e6;

    std::uint32_t idx = 0;
    for (std::uint32_t s = 0; s < sc.site_positions.size(); ++s) {
        for (int k = 0; k < cfg.sectors_per_site; ++k) {
            sc.endpoints.push_back(make_endpoint(idx++, EndpointKind::MacroBS, sc.site_positions[s], cfg.macro, s));
        }
    }
    sc.n_macro = idx;

    sc.micro_coverage_radius_m =
        coverage_radius(cfg.micro_ue, cfg.micro.tx_power_dbm, cfg.coverage_threshold_dbm);
    const double min_sep = 2.0 * sc.micro_coverage_radius_m;
    std::vector<Vec2> micros;
    std::uniform_int_distribution<std::size_t> pick_site(0, sc.site_positions.empty() ? 0 : sc.site_positions.size() - 1);
    for (std::uint32_t s = 0; s < sc.site_positions.size(); ++s) {
        for (int m = 0; m < cfg.n_micro_per_macro; ++m) {
            bool placed = false;
            for (int attempt = 0; attempt < cfg.placement_retries && !placed; ++attempt) {
                const Vec2 p = uniform_in_hex(sc.site_positions[s], isd, rng);
                const bool near_macro = std::any_of(sc.site_positions.begin(), sc.site_positions.end(), [&](Vec2 q) {
                    return distance(p, q) < cfg.micro_min_macro_distance_m;
                });
                if (near_macro) continue;
                const bool overlaps = std::any_of(micros.begin(), micros.end(),
                                                  [&](Vec2 q) { return distance(p, q) < min_sep; });
                if (overlaps) continue;
                micros.push_back(p);
                sc.endpoints.push_back(make_endpoint(idx++, EndpointKind::MicroBS, p, cfg.micro, s));
                placed = true;
            }
            if (!placed) {
                throw PlacementError("cannot place micro " + std::to_string(micros.size()) + " in site " +
                                     std::to_string(s) + " without overlapping coverage after " +
                                     std::to_string(cfg.placement_retries) + " attempts");
            }
        }
    }
    sc.n_micro = idx - sc.n_macro;

    int remaining = cfg.n_users;
    for (std::uint32_t m = 0; m < micros.size() && remaining > 0; ++m) {
        for (int k = 0; k < cfg.users_per_micro_cluster && remaining > 0; ++k, --remaining) {
            const Vec2 p = uniform_in_disc(micros[m], cfg.cluster_radius_m, rng);
            sc.endpoints.push_back(make_endpoint(idx++, EndpointKind::UE, p, cfg.ue, m));
        }
    }
    for (; remaining > 0; --remaining) {
        const Vec2 p = uniform_in_hex(sc.site_positions[pick_site(rng)], isd, rng);
        sc.endpoints.push_back(make_endpoint(idx++, EndpointKind::UE, p, cfg.ue, std::nullopt));
    }
    sc.n_ue = idx - sc.n_macro - sc.n_micro;
    return sc;
}

LinkBudget::LinkBudget(std::vector<EndpointKind> kinds, std::uint32_t first_ue, double noise_w)
    : kinds_(std::move(kinds)),
      first_ue_(first_ue),
      n_ue_(static_cast<std::uint32_t>(kinds_.size()) - first_ue),
      noise_w_(noise_w),
      power_(static_cast<std::size_t>(kinds_.size()) * n_ue_, 0.0),
      atten_(static_cast<std::size_t>(kinds_.size()) * n_ue_, kInf),
      coverage_(static_cast<std::size_t>(kinds_.size()) * n_ue_, 0),
      covering_(n_ue_) {}

double LinkBudget::received_dbm(EndpointId tx, EndpointId rx) const {
    const double a = attenuation(tx, rx);
    if (!std::isfinite(a)) return -kInf;
    return watts_to_dbm(power(tx, rx)) - 10.0 * std::log10(a);
}

void LinkBudget::set(EndpointId tx, EndpointId rx, double power_w, double attenuation, bool covered) {
    const auto i = slot(tx, rx);
    power_[i] = power_w;
    atten_[i] = attenuation;
    coverage_[i] = covered ? 1 : 0;
}

void LinkBudget::finalize() {
    for (std::uint32_t u = 0; u < n_ue_; ++u) {
        auto& list = covering_[u];
        list.clear();
        const EndpointId rx = endpoint_id(first_ue_ + u);
        for (std::uint32_t t = 0; t < kinds_.size(); ++t) {
            if (coverage(endpoint_id(t), rx)) list.push_back(endpoint_id(t));
        }
    }
}

LinkBudget compute_link_budget(const Scenario& sc, std::span<const Vec2> positions, const ScenarioConfig& cfg) {
    std::vector<EndpointKind> kinds;
    kinds.reserve(sc.endpoints.size());
    for (const auto& e : sc.endpoints) kinds.push_back(e.kind);
    LinkBudget lb(std::move(kinds), sc.first_ue(), dbm_to_watts(cfg.noise_dbm_per_rb));

    for (std::uint32_t t = 0; t < sc.size(); ++t) {
        const Endpoint& tx = sc.endpoints[t];
        for (std::uint32_t r = sc.first_ue(); r < sc.size(); ++r) {
            if (r == t) continue;
            const double pl = path_loss(cfg, link_class(tx.kind, EndpointKind::UE), distance(positions[t], positions[r]));
            double p_dbm = tx.tx_power_dbm;
            if (tx.kind == EndpointKind::UE && cfg.d2d_power_control) {
                p_dbm = std::min(tx.tx_power_dbm, cfg.d2d_target_rx_dbm + pl);
            }
            const bool covered = p_dbm - pl > cfg.coverage_threshold_dbm;
            lb.set(endpoint_id(t), endpoint_id(r), dbm_to_watts(p_dbm), std::pow(10.0, pl / 10.0), covered);
        }
    }
    lb.finalize();
    return lb;
}

void step_mobility(const Scenario& sc, std::vector<Vec2>& positions, Step dt_steps, const ScenarioConfig& cfg,
                   Rng& rng) {
    const double step_len = cfg.user_speed_mps * kStepSeconds;
    if (step_len <= 0.0 || dt_steps <= 0) return;
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    std::vector<Vec2> micro_pos(sc.n_micro);
    for (std::uint32_t m = 0; m < sc.n_micro; ++m) micro_pos[m] = positions[sc.n_macro + m];

    for (Step s = 0; s < dt_steps; ++s) {
        for (std::uint32_t i = sc.first_ue(); i < sc.size(); ++i) {
            const auto& group = sc.endpoints[i].group;
            auto inside = [&](Vec2 p) {
                if (group) return distance(p, micro_pos[*group]) <= cfg.cluster_radius_m;
                return in_network_area(sc, cfg, p);
            };
            const double a = angle(rng);
            const Vec2 v{step_len * std::cos(a), step_len * std::sin(a)};
            Vec2& p = positions[i];
            if (inside(p + v)) {
                p = p + v;
            } else if (inside(p - v)) {
                p = p - v;
            }
        }
    }
}

}  // namespace d2dsim
