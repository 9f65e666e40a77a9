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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Locale-independent number text. All persisted numbers go through here.
namespace simo::text
{
    /// Nine significant digits, '.' decimal point, shortest of fixed/scientific.
    std::string sig9(double value);
    /// Shortest text that reads back to exactly `value`.
    std::string exact(double value);
    /// Rounds `value` to what sig9() would store.
    double quantize9(double value);

    /// Whole-string parse; nullopt on trailing garbage, empty input or out-of-range values.
    std::optional<double> parse_double(std::string_view s);
    std::optional<std::size_t> parse_size(std::string_view s);

    std::string_view trim(std::string_view s);
    std::vector<std::string_view> split(std::string_view s, char separator);
}
