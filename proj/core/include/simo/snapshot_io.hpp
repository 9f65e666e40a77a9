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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simo/analysis.hpp"
#include "simo/channel.hpp"
#include "simo/sounder.hpp"

namespace simo
{
    inline constexpr std::string_view gain_file_header = "interval,snapshot,t_ms,element,h_re,h_im,rss_dbm";
    inline constexpr std::string_view iq_file_header = "interval,snapshot,element,sample,i,q";
    /// rss_dbm cell for a zero gain.
    inline constexpr std::string_view below_floor_marker = "below_floor";

    struct GainFileRow
    {
        std::size_t interval_id = 1;
        std::size_t snapshot_idx = 0;
        double time_ms = 0.0;
        std::vector<cdouble> gains;
        std::vector<std::optional<double>> rss_dbm;

        friend bool operator==(const GainFileRow &, const GainFileRow &) = default;
    };

    /// In-memory image of a gain snapshot file; numbers are held at the 9 significant digits stored on disk.
    struct GainSnapshotFile
    {
        std::vector<GainFileRow> snapshots;

        std::size_t n_elements() const { return snapshots.empty() ? 0 : snapshots.front().gains.size(); }
        friend bool operator==(const GainSnapshotFile &, const GainSnapshotFile &) = default;
    };

    /// Estimated gains of each record, with antenna-port RSS at `tx_power_dbm`.
    GainSnapshotFile make_gain_file(std::span<const SnapshotRecord> records, double tx_power_dbm);

    std::string format_gain_file(const GainSnapshotFile &file);

    /// Strict reader: exact header, canonical (interval, snapshot, element) order, contiguous elements
    /// 1..N, identical N for every snapshot, finite numbers. Throws ErrorKind::malformed_input with the line.
    GainSnapshotFile parse_gain_file(std::string_view text);

    std::vector<GainSnapshot> to_gain_snapshots(const GainSnapshotFile &file);

    /// Transmit power implied by the first usable rss_dbm cell, i.e. rss - 20 log10 |h|.
    std::optional<double> infer_tx_power_dbm(const GainSnapshotFile &file);

    /// Raw IQ of records that kept it; records without IQ are skipped.
    std::string format_iq_file(std::span<const SnapshotRecord> records);
}
