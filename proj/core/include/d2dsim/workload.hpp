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

#include <vector>

#include "d2dsim/config.hpp"
#include "d2dsim/scenario.hpp"
#include "d2dsim/state.hpp"

namespace d2dsim {

struct Request {
    std::uint32_t user;  // UE index
    ContentId content;
    Step want;

    friend bool operator==(const Request&, const Request&) = default;
};

struct Workload {
    // Sorted by (want, user, content); at most one request per (user, content).
    std::vector<Request> requests;
};

/// Each user draws `requests_per_user` requests: category by mix weight, item
/// uniform within the category, want-time uniform over the category interval.
/// A repeated (user, item) draw is dropped.
Workload generate_workload(const WorkloadConfig& cfg, const Catalog& catalog, std::uint32_t n_users, Rng& rng);

/// RNG stream for the workload, independent of the geometry stream.
Rng workload_rng(std::uint64_t seed);

}  // namespace d2dsim
