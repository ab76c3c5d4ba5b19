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

#include "d2dsim/state.hpp"

#include <algorithm>
#include <string>

#include "d2dsim/error.hpp"

namespace d2dsim {

Catalog Catalog::from_config(const WorkloadConfig& cfg) {
    Catalog cat;
    for (int k = 0; k < kNumCategories; ++k) {
        const auto& spec = cfg.categories[static_cast<std::size_t>(k)];
        for (int i = 0; i < spec.items; ++i) {
            cat.items.push_back(ContentItem{content_id(cat.size()), spec.size_bits, spec.deadline_steps,
                                            static_cast<ContentCategory>(k)});
        }
    }
    return cat;
}

SystemState::SystemState(std::shared_ptr<const Catalog> catalog, std::uint32_t n_users, std::uint32_t first_ue)
    : catalog_(std::move(catalog)),
      n_users_(n_users),
      first_ue_(first_ue),
      duplets_(static_cast<std::size_t>(n_users) * catalog_->size()),
      active_(n_users) {}

Bits SystemState::held(EndpointId e, ContentId c) const {
    if (!is_user(e)) return (*catalog_)[c].size_bits;
    const auto& d = duplets_[slot(user_index(e), c)];
    if (d.status == DupletStatus::Active || d.status == DupletStatus::Completed) return d.downloaded;
    return 0;
}

Step SystemState::downloader_priority(std::uint32_t u) const {
    for (ContentId c : active_[u]) {
        const Step w = duplets_[slot(u, c)].want;
        if (w < step_) return w;  // list is sorted by want-time
    }
    return kNoStep;
}

void SystemState::reveal(std::uint32_t u, ContentId c, Step want) {
    auto& d = duplets_[slot(u, c)];
    if (d.status != DupletStatus::None) return;
    if (want > step_) throw InvariantViolation("revealing a want-time in the future");
    d = Duplet{0, want, DupletStatus::Active};
    auto& list = active_[u];
    const auto pos = std::find_if(list.begin(), list.end(), [&](ContentId o) {
        const Step ow = duplets_[slot(u, o)].want;
        return ow > want || (ow == want && to_index(o) > to_index(c));
    });
    list.insert(pos, c);
    ++n_active_;
}

void SystemState::drop_active(std::uint32_t u, ContentId c) {
    auto& list = active_[u];
    list.erase(std::find(list.begin(), list.end(), c));
    --n_active_;
}

std::vector<UserContent> SystemState::reap_expired() {
    std::vector<UserContent> failed;
    if (n_active_ == 0) return failed;
    for (std::uint32_t u = 0; u < n_users_; ++u) {
        for (std::size_t i = 0; i < active_[u].size();) {
            const ContentId c = active_[u][i];
            auto& d = duplets_[slot(u, c)];
            if (step_ >= d.want + (*catalog_)[c].deadline_steps) {
                d.status = DupletStatus::Failed;
                active_[u].erase(active_[u].begin() + static_cast<std::ptrdiff_t>(i));
                --n_active_;
                failed.push_back({u, c});
            } else {
                ++i;
            }
        }
    }
    return failed;
}

bool SystemState::add_bits(std::uint32_t u, ContentId c, Bits bits) {
    auto& d = duplets_[slot(u, c)];
    if (d.status != DupletStatus::Active) {
        throw InvariantViolation("transfer to non-active duplet (user " + std::to_string(u) + ", content " +
                                 std::to_string(to_index(c)) + ")");
    }
    if (bits < 0) throw InvariantViolation("negative transfer");
    const Bits size = (*catalog_)[c].size_bits;
    if (d.downloaded + bits > size) {
        throw InvariantViolation("download overflow (user " + std::to_string(u) + ", content " +
                                 std::to_string(to_index(c)) + ")");
    }
    d.downloaded += bits;
    if (d.downloaded == size) {
        d.status = DupletStatus::Completed;
        drop_active(u, c);
        return true;
    }
    return false;
}

}  // namespace d2dsim
