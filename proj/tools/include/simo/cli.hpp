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

#include <iosfwd>
#include <string>
#include <vector>

namespace simo::cli
{
    /// Process exit codes.
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_usage = 1,     // bad arguments, unreadable paths, incompatible reports
        exit_malformed = 2, // malformed config, snapshot file or report
        exit_numeric = 3    // a non-finite value was produced
    };

    /// Runs `simo-sounder <args...>`; args exclude the program name.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}
