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
#include <memory>
#include <span>
#include <vector>

#include "d2dsim/config.hpp"
#include "d2dsim/types.hpp"

namespace d2dsim {

struct ContentItem {
    ContentId id;
    Bits size_bits;
    Step deadline_steps;
    ContentCategory category;
};

struct Catalog {
    std::vector<ContentItem> items;

    /// Items grouped by category in ContentCategory order.
    static Catalog from_config(const WorkloadConfig& cfg);

    std::uint32_t size() const { return static_cast<std::uint32_t>(items.size()); }
    const ContentItem& operator[](ContentId c) const { return items[to_index(c)]; }
};

enum class DupletStatus : std::uint8_t { None, Active, Completed, Failed };

struct Duplet {
    Bits downloaded = 0;
    Step want = kNoStep;
    DupletStatus status = DupletStatus::None;
};

struct UserContent {
    std::uint32_t user;  // UE index, not endpoint id
    ContentId content;

    friend bool operator==(const UserContent&, const UserContent&) = default;
};

/// Per (user, content) duplets plus the current step. Base stations implicitly
/// hold every item in full.
class SystemState {
   public:
    SystemState() = default;
    SystemState(std::shared_ptr<const Catalog> catalog, std::uint32_t n_users, std::uint32_t first_ue);

    Step step() const { return step_; }
    void set_step(Step k) { step_ = k; }

    const Catalog& catalog() const { return *catalog_; }
    std::uint32_t n_users() const { return n_users_; }
    std::uint32_t first_ue() const { return first_ue_; }
    std::uint32_t user_index(EndpointId e) const { return to_index(e) - first_ue_; }
    EndpointId user_endpoint(std::uint32_t u) const { return endpoint_id(first_ue_ + u); }
    bool is_user(EndpointId e) const { return to_index(e) >= first_ue_; }

    const Duplet& duplet(std::uint32_t u, ContentId c) const { return duplets_[slot(u, c)]; }

    /// Bits of `c` available at endpoint `e`: l_c for a BS, h for a UE that
    /// holds an active or completed duplet, zero otherwise.
    Bits held(EndpointId e, ContentId c) const;

    /// Active contents of user `u`, ordered by (want-time, content id).
    std::span<const ContentId> active(std::uint32_t u) const { return active_[u]; }
    bool has_active() const { return n_active_ > 0; }
    std::uint32_t n_active() const { return n_active_; }

    /// Minimum want-time over active duplets with want < step(), or kNoStep if
    /// the user is not a downloader this step.
    Step downloader_priority(std::uint32_t u) const;

    /// Inserts an active duplet. A user requests each item at most once.
    void reveal(std::uint32_t u, ContentId c, Step want);

    /// Removes active duplets whose deadline has passed (step >= w + D).
    std::vector<UserContent> reap_expired();

    /// Adds bits to an active duplet; returns true if it just completed.
    /// Throws InvariantViolation on overflow or a non-active duplet.
    bool add_bits(std::uint32_t u, ContentId c, Bits bits);

   private:
    std::size_t slot(std::uint32_t u, ContentId c) const {
        return static_cast<std::size_t>(u) * catalog_->size() + to_index(c);
    }
    void drop_active(std::uint32_t u, ContentId c);

    std::shared_ptr<const Catalog> catalog_;
    std::uint32_t n_users_ = 0;
    std::uint32_t first_ue_ = 0;
    Step step_ = 0;
    std::vector<Duplet> duplets_;
    std::vector<std::vector<ContentId>> active_;
    std::uint32_t n_active_ = 0;
};

}  // namespace d2dsim
