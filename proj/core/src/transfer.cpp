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

#include "d2dsim/transfer.hpp"

#include <algorithm>
#include <map>

#include "d2dsim/error.hpp"

namespace d2dsim {

Bits TransferResult::total() const {
    Bits sum = 0;
    for (const auto& c : chi) sum += c.bits;
    return sum;
}

TransferResult compute_chi(const Action& a, const DeltaMap& delta, const SystemState& s) {
    if (delta.size() != a.size()) throw InvariantViolation("delta map does not match action");

    struct PairFill {
        EndpointId tx;
        EndpointId rx;
        std::vector<ContentId> contents;
        std::vector<Bits> remaining;
        std::vector<Bits> moved;
    };
    std::vector<PairFill> pairs;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> pair_index;

    TransferResult out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& t = a.triplets[i];
        const auto key = std::pair{to_index(t.tx), to_index(t.rx)};
        auto [it, fresh] = pair_index.try_emplace(key, pairs.size());
        if (fresh) {
            PairFill p{t.tx, t.rx, {}, {}, {}};
            const auto u = s.user_index(t.rx);
            for (ContentId c : s.active(u)) {
                p.contents.push_back(c);
                p.remaining.push_back(std::max<Bits>(0, s.held(t.tx, c) - s.duplet(u, c).downloaded));
                p.moved.push_back(0);
            }
            pairs.push_back(std::move(p));
        }
        if (delta[i] <= 0) continue;
        auto& p = pairs[it->second];
        Bits room = delta[i];
        for (std::size_t k = 0; k < p.contents.size() && room > 0; ++k) {
            const Bits take = std::min(p.remaining[k], room);
            if (take <= 0) continue;
            out.y.push_back({i, p.contents[k], take});
            p.remaining[k] -= take;
            p.moved[k] += take;
            room -= take;
        }
    }
    for (const auto& p : pairs) {
        for (std::size_t k = 0; k < p.contents.size(); ++k) {
            if (p.moved[k] > 0) out.chi.push_back({p.tx, p.rx, p.contents[k], p.moved[k]});
        }
    }
    return out;
}

std::vector<UserContent> apply_transfers(SystemState& s, const TransferResult& r) {
    std::vector<UserContent> done;
    for (const auto& c : r.chi) {
        const auto u = s.user_index(c.rx);
        if (s.add_bits(u, c.content, c.bits)) done.push_back({u, c.content});
    }
    return done;
}

}  // namespace d2dsim
