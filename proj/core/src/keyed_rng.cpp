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

#include "simo/keyed_rng.hpp"

#include <cmath>
#include <numbers>

namespace simo
{
    std::uint64_t splitmix64(std::uint64_t x) noexcept
    {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    KeyedStream::KeyedStream(std::uint64_t seed, std::initializer_list<std::uint64_t> key)
    {
        std::uint64_t h = splitmix64(seed);
        for (auto k : key)
            h = splitmix64(h ^ splitmix64(k + 0x632BE59BD9B4E019ull));
        base_ = h;
    }

    std::uint64_t KeyedStream::next_u64() noexcept
    {
        return splitmix64(base_ ^ splitmix64(counter_++));
    }

    double KeyedStream::uniform() noexcept
    {
        // 53 random bits, shifted by half an ulp so 0 is never returned.
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    std::pair<double, double> KeyedStream::normal_pair() noexcept
    {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }
}
