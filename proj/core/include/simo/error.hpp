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
#include <stdexcept>
#include <string>

namespace simo
{
    enum class ErrorKind
    {
        invalid_input,        // non-finite or out-of-domain argument
        undefined_ratio,      // normalized capacity 0/0
        reference_zero,       // gain ratio with |h_1| = 0
        invalid_geometry,     // array construction
        singular_geometry,    // element coincides with the transmitter
        invalid_ray,          // reflection point not on a wall
        degenerate_reference, // matched filter reference with zero energy
        empty_input,
        incomparable_reports,
        malformed_config,
        malformed_input, // snapshot / report files
        numeric_failure, // non-finite value produced during simulation
        io_failure
    };

    const char *to_string(ErrorKind kind) noexcept;

    /// Single exception type for the library; `kind()` tells callers what went wrong.
    /// `line()` is non-zero for parse errors that can be pinned to an input line.
    class Error : public std::runtime_error
    {
    public:
        Error(ErrorKind kind, const std::string &message, std::size_t line = 0)
            : std::runtime_error(message), kind_(kind), line_(line) {}

        ErrorKind kind() const noexcept { return kind_; }
        std::size_t line() const noexcept { return line_; }

    private:
        ErrorKind kind_;
        std::size_t line_;
    };
}
