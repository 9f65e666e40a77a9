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

#include <string>
#include <string_view>

#include "simo/analysis.hpp"

namespace simo
{
    /// Deterministic JSON text with a fixed key order.
    std::string format_report(const SummaryReport &report);
    /// Throws ErrorKind::malformed_input on invalid JSON or missing and mistyped members.
    SummaryReport parse_report(std::string_view text);

    /// Plot-ready per-snapshot CSV tables, one row per snapshot.
    std::string format_rss_series(const MetricSeries &series);
    std::string format_k_series(const MetricSeries &series);
    std::string format_capacity_series(const MetricSeries &series);
    std::string format_normalized_capacity_series(const MetricSeries &series);

    /// `metric,value_a,value_b,delta,higher` table; `higher` names the report with the larger value.
    std::string format_comparison(const Comparison &comparison);
}
