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

#include "simo/number_format.hpp"

#include <charconv>
#include <system_error>

namespace simo::text
{
    std::string sig9(double value)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
        return std::string(buf, res.ptr);
    }

    std::string exact(double value)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, value);
        return std::string(buf, res.ptr);
    }

    double quantize9(double value) { return *parse_double(sig9(value)); }

    std::optional<double> parse_double(std::string_view s)
    {
        if (s.empty())
            return std::nullopt;
        double value = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            return std::nullopt;
        return value;
    }

    std::optional<std::size_t> parse_size(std::string_view s)
    {
        if (s.empty())
            return std::nullopt;
        std::size_t value = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            return std::nullopt;
        return value;
    }

    std::string_view trim(std::string_view s)
    {
        const auto first = s.find_first_not_of(" \t");
        if (first == std::string_view::npos)
            return {};
        const auto last = s.find_last_not_of(" \t");
        return s.substr(first, last - first + 1);
    }

    std::vector<std::string_view> split(std::string_view s, char separator)
    {
        std::vector<std::string_view> out;
        std::size_t start = 0;
        while (true)
        {
            const auto pos = s.find(separator, start);
            if (pos == std::string_view::npos)
            {
                out.push_back(s.substr(start));
                return out;
            }
            out.push_back(s.substr(start, pos - start));
            start = pos + 1;
        }
    }
}
