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

#include "d2dsim/radio.hpp"
#include "d2dsim/state.hpp"

namespace d2dsim {

/// Bits of one content carried on one triplet's RB.
struct RbTransfer {
    std::size_t triplet;
    ContentId content;
    Bits bits;
};

/// Bits of one content moved between a pair over all of its RBs.
struct PairTransfer {
    EndpointId tx;
    EndpointId rx;
    ContentId content;
    Bits bits;
};

struct TransferResult {
    std::vector<RbTransfer> y;
    std::vector<PairTransfer> chi;

    Bits total() const;
};

/// Fills every triplet with positive capacity with the receiver's
/// incompletely transferred items, oldest want-time first (ties by content
/// id). Several items may share an RB. Bytes flow in order, so a pair never
/// moves more of an item than the source holds beyond the receiver, summed
/// over all of the pair's RBs.
TransferResult compute_chi(const Action& a, const DeltaMap& delta, const SystemState& s);

/// h += chi per duplet. Returns the duplets completed by this update.
/// Throws InvariantViolation if a transfer would overflow an item.
std::vector<UserContent> apply_transfers(SystemState& s, const TransferResult& r);

}  // namespace d2dsim
