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

#include <filesystem>
#include <string>
#include <string_view>

namespace simo
{
    inline constexpr std::string_view tool_version = "1.0.0";

    /// Throws ErrorKind::io_failure.
    std::string read_text_file(const std::filesystem::path &path);

    /// Writes to a temporary sibling and renames it over `path`, so readers never see a partial file.
    void write_file_atomic(const std::filesystem::path &path, std::string_view content);
}
