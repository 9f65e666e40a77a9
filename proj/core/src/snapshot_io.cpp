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

#include "simo/snapshot_io.hpp"

#include <cmath>
#include <tuple>

#include "simo/error.hpp"
#include "simo/number_format.hpp"

namespace simo
{
    namespace
    {
        [[noreturn]] void fail(std::size_t line, const std::string &what)
        {
            throw Error(ErrorKind::malformed_input, "line " + std::to_string(line) + ": " + what, line);
        }

        double field_double(std::string_view s, std::size_t line, const char *name)
        {
            const auto d = text::parse_double(s);
            if (!d || !std::isfinite(*d))
                fail(line, std::string("invalid ") + name + " '" + std::string(s) + "'");
            return *d;
        }

        std::size_t field_size(std::string_view s, std::size_t line, const char *name)
        {
            const auto n = text::parse_size(s);
            if (!n)
                fail(line, std::string("invalid ") + name + " '" + std::string(s) + "'");
            return *n;
        }
    }

    GainSnapshotFile make_gain_file(std::span<const SnapshotRecord> records, double tx_power_dbm)
    {
        GainSnapshotFile file;
        file.snapshots.reserve(records.size());
        for (const auto &rec : records)
        {
            GainFileRow row;
            row.interval_id = rec.interval_id;
            row.snapshot_idx = rec.snapshot_idx;
            row.time_ms = text::quantize9(rec.time_ms);
            for (const auto &h : rec.estimated_gains)
            {
                const cdouble q{text::quantize9(h.real()), text::quantize9(h.imag())};
                row.gains.push_back(q);
                const auto rss = rss_dbm(q, tx_power_dbm);
                row.rss_dbm.push_back(rss ? std::optional<double>(text::quantize9(*rss)) : std::nullopt);
            }
            file.snapshots.push_back(std::move(row));
        }
        return file;
    }

    std::string format_gain_file(const GainSnapshotFile &file)
    {
        std::string out(gain_file_header);
        out += '\n';
        for (const auto &row : file.snapshots)
        {
            const std::string prefix = std::to_string(row.interval_id) + ',' + std::to_string(row.snapshot_idx) + ',' +
                                       text::sig9(row.time_ms) + ',';
            for (std::size_t i = 0; i < row.gains.size(); ++i)
            {
                out += prefix;
                out += std::to_string(i + 1) + ',';
                out += text::sig9(row.gains[i].real()) + ',' + text::sig9(row.gains[i].imag()) + ',';
                out += row.rss_dbm[i] ? text::sig9(*row.rss_dbm[i]) : std::string(below_floor_marker);
                out += '\n';
            }
        }
        return out;
    }

    GainSnapshotFile parse_gain_file(std::string_view input)
    {
        auto lines = text::split(input, '\n');
        if (!lines.empty() && lines.back().empty())
            lines.pop_back();
        if (lines.empty())
            fail(1, "empty file");
        if (lines.front() != gain_file_header)
            fail(1, "expected header '" + std::string(gain_file_header) + "'");
        if (lines.size() == 1)
            fail(1, "no data rows");

        GainSnapshotFile file;
        std::size_t n_elements = 0; // fixed once the first snapshot closes
        std::size_t last_line = 1;

        auto close_snapshot = [&](std::size_t line) {
            const auto &row = file.snapshots.back();
            if (n_elements == 0)
                n_elements = row.gains.size();
            else if (row.gains.size() != n_elements)
                fail(line, "snapshot (" + std::to_string(row.interval_id) + ", " + std::to_string(row.snapshot_idx) +
                               ") has " + std::to_string(row.gains.size()) + " elements, expected " +
                               std::to_string(n_elements));
        };

        for (std::size_t k = 1; k < lines.size(); ++k)
        {
            const std::size_t line = k + 1;
            const auto cells = text::split(lines[k], ',');
            if (cells.size() != 7)
                fail(line, "expected 7 fields, found " + std::to_string(cells.size()));

            const auto interval = field_size(cells[0], line, "interval");
            const auto snapshot = field_size(cells[1], line, "snapshot");
            const auto t_ms = field_double(cells[2], line, "t_ms");
            const auto element = field_size(cells[3], line, "element");
            const cdouble h{field_double(cells[4], line, "h_re"), field_double(cells[5], line, "h_im")};
            std::optional<double> rss;
            if (cells[6] != below_floor_marker)
                rss = field_double(cells[6], line, "rss_dbm");
            if (interval == 0)
                fail(line, "interval ids start at 1");

            if (element == 1)
            {
                if (!file.snapshots.empty())
                {
                    close_snapshot(line - 1);
                    const auto &prev = file.snapshots.back();
                    if (std::tie(interval, snapshot) <= std::tie(prev.interval_id, prev.snapshot_idx))
                        fail(line, "snapshot (" + std::to_string(interval) + ", " + std::to_string(snapshot) +
                                       ") out of canonical order");
                }
                file.snapshots.push_back({interval, snapshot, t_ms, {}, {}});
            }
            else
            {
                if (file.snapshots.empty())
                    fail(line, "first row must be element 1");
                const auto &cur = file.snapshots.back();
                if (interval != cur.interval_id || snapshot != cur.snapshot_idx)
                    fail(line, "snapshot (" + std::to_string(interval) + ", " + std::to_string(snapshot) +
                                   ") starts at element " + std::to_string(element) + " instead of 1");
                if (element != cur.gains.size() + 1)
                    fail(line, "element " + std::to_string(element) + " out of order, expected " +
                                   std::to_string(cur.gains.size() + 1));
                if (n_elements != 0 && element > n_elements)
                    fail(line, "element " + std::to_string(element) + " exceeds element count " +
                                   std::to_string(n_elements));
                if (t_ms != cur.time_ms)
                    fail(line, "t_ms differs within one snapshot");
            }
            file.snapshots.back().gains.push_back(h);
            file.snapshots.back().rss_dbm.push_back(rss);
            last_line = line;
        }
        close_snapshot(last_line);
        return file;
    }

    std::vector<GainSnapshot> to_gain_snapshots(const GainSnapshotFile &file)
    {
        std::vector<GainSnapshot> out;
        out.reserve(file.snapshots.size());
        for (const auto &row : file.snapshots)
            out.push_back({row.interval_id, row.snapshot_idx, row.time_ms, GainVector(row.gains)});
        return out;
    }

    std::optional<double> infer_tx_power_dbm(const GainSnapshotFile &file)
    {
        for (const auto &row : file.snapshots)
            for (std::size_t i = 0; i < row.gains.size(); ++i)
                if (row.rss_dbm[i] && std::abs(row.gains[i]) > 0.0)
                    return *row.rss_dbm[i] - amplitude_ratio_to_db(std::abs(row.gains[i]));
        return std::nullopt;
    }

    std::string format_iq_file(std::span<const SnapshotRecord> records)
    {
        std::string out(iq_file_header);
        out += '\n';
        for (const auto &rec : records)
        {
            if (!rec.iq)
                continue;
            for (std::size_t e = 0; e < rec.iq->size(); ++e)
            {
                const std::string prefix = std::to_string(rec.interval_id) + ',' + std::to_string(rec.snapshot_idx) +
                                           ',' + std::to_string(e + 1) + ',';
                const auto &samples = (*rec.iq)[e];
                for (std::size_t n = 0; n < samples.size(); ++n)
                {
                    out += prefix;
                    out += std::to_string(n) + ',' + text::sig9(samples[n].real()) + ',' +
                           text::sig9(samples[n].imag()) + '\n';
                }
            }
        }
        return out;
    }
}
