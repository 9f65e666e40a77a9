// SPDX-License-Identifier: Apache-2.0
//
// simo-sounder: SIMO indoor channel-sounder simulation and analysis
// Copyright (C) 2026 The simo-sounder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>

namespace simo
{
    /// Counter-based random stream. Every draw is a pure function of (seed, key..., draw index),
    /// so results do not depend on which thread produces them or in what order.
    class KeyedStream
    {
    public:
        KeyedStream(std::uint64_t seed, std::initializer_list<std::uint64_t> key);

        std::uint64_t next_u64() noexcept;
        /// Uniform on the open interval (0, 1).
        double uniform() noexcept;
        double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
        /// Two independent standard normals (Box-Muller).
        std::pair<double, double> normal_pair() noexcept;

    private:
        std::uint64_t base_;
        std::uint64_t counter_ = 0;
    };

    std::uint64_t splitmix64(std::uint64_t x) noexcept;
}
