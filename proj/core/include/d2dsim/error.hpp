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

#include <stdexcept>
#include <string>

namespace d2dsim {

/// Invalid or inconsistent configuration. Surfaced before a run starts.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Micro BS placement could not satisfy the non-overlap rule.
class PlacementError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A link was evaluated that has no propagation path.
class ModelError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Internal bookkeeping went wrong (e.g. a download overflowed its size, or a
/// cost denominator reached zero).
class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace d2dsim
