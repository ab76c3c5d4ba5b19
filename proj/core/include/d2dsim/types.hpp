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

#include <cmath>
#include <cstdint>
#include <limits>
#include <string_view>

namespace d2dsim {

/// Dense endpoint index. Layout inside a scenario: macro sectors, then
/// micro BSs, then UEs.
enum class EndpointId : std::uint32_t {};

/// Index into the content catalog.
enum class ContentId : std::uint32_t {};

constexpr std::uint32_t to_index(EndpointId id) { return static_cast<std::uint32_t>(id); }
constexpr std::uint32_t to_index(ContentId id) { return static_cast<std::uint32_t>(id); }
constexpr EndpointId endpoint_id(std::uint32_t i) { return static_cast<EndpointId>(i); }
constexpr ContentId content_id(std::uint32_t i) { return static_cast<ContentId>(i); }

/// Time step (one 1 ms subframe).
using Step = std::int64_t;

/// Amount of data in bits. Integral so that conservation checks are exact.
using Bits = std::int64_t;

constexpr Step kNoStep = std::numeric_limits<Step>::min();

enum class EndpointKind : std::uint8_t { MacroBS, MicroBS, UE };

constexpr std::string_view to_string(EndpointKind k) {
    switch (k) {
        case EndpointKind::MacroBS: return "macro";
        case EndpointKind::MicroBS: return "micro";
        case EndpointKind::UE: return "ue";
    }
    return "?";
}

constexpr bool is_bs(EndpointKind k) { return k != EndpointKind::UE; }

enum class ContentCategory : std::uint8_t { Ebook, Video, Viral };

constexpr std::string_view to_string(ContentCategory c) {
    switch (c) {
        case ContentCategory::Ebook: return "ebook";
        case ContentCategory::Video: return "video";
        case ContentCategory::Viral: return "viral";
    }
    return "?";
}

inline constexpr int kNumKinds = 3;
inline constexpr int kNumCategories = 3;

constexpr int kind_slot(EndpointKind k) { return static_cast<int>(k); }
constexpr int category_slot(ContentCategory c) { return static_cast<int>(c); }

/// 1 ms subframe.
inline constexpr double kStepSeconds = 1e-3;

inline double dbm_to_watts(double dbm) {
    return 1e-3 * std::pow(10.0, dbm / 10.0);
}

inline double watts_to_dbm(double w) { return 10.0 * std::log10(w * 1e3); }

}  // namespace d2dsim
