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

#include "simo/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace simo
{
    GainVector capacity_view(const GainVector &h, double capacity_ref_gain_db)
    {
        if (capacity_ref_gain_db == 0.0)
            return h;
        return h.scaled(1.0 / db_to_amplitude_ratio(capacity_ref_gain_db));
    }

    MetricSeries compute_metrics(std::span<const GainSnapshot> snapshots, const AnalysisOptions &options,
                                 std::string geometry)
    {
        if (snapshots.empty())
            throw Error(ErrorKind::empty_input, "no snapshots to analyze");
        if (options.rho.linear() <= 0.0)
            throw Error(ErrorKind::invalid_input, "analysis needs rho > 0");

        MetricSeries series;
        series.geometry = std::move(geometry);
        series.rho = options.rho;
        series.capacity_ref_gain_db = options.capacity_ref_gain_db;
        series.rss_offset_db = options.rss_offset_db;
        series.n_elements = snapshots.front().gains.size();
        series.records.reserve(snapshots.size());

        for (const auto &snap : snapshots)
        {
            const GainVector &h = snap.gains;
            if (h.size() != series.n_elements)
                throw Error(ErrorKind::invalid_input, "snapshots disagree on the element count");

            MetricRecord rec;
            rec.interval_id = snap.interval_id;
            rec.snapshot_idx = snap.snapshot_idx;
            rec.time_ms = snap.time_ms;

            rec.rss_dbm.reserve(h.size());
            for (const auto &v : h)
            {
                auto rss = rss_dbm(v, options.tx_power_dbm);
                rec.rss_dbm.push_back(rss ? std::optional<double>(*rss + options.rss_offset_db) : std::nullopt);
            }

            if (std::abs(h[0]) > 0.0)
            {
                const auto k = gain_ratios(h);
                rec.k_linear.emplace(k.linear().begin(), k.linear().end());
                rec.k_db = k.db();
            }
            else
            {
                rec.k_db.assign(h.size(), std::nullopt);
            }

            const GainVector view = capacity_view(h, options.capacity_ref_gain_db);
            rec.capacity = capacity(view, options.rho).bps_per_hz;
            rec.mean_branch_capacity = mean_branch_capacity(view, options.rho);
            if (view.total_power() > 0.0 && rec.mean_branch_capacity > 0.0)
                rec.normalized_capacity = normalized_capacity(view, options.rho);

            series.records.push_back(std::move(rec));
        }
        return series;
    }

    Stats describe(std::span<const double> values)
    {
        if (values.empty())
            throw Error(ErrorKind::empty_input, "no values to describe");
        // Summed in sorted order.
        std::vector<double> sorted(values.begin(), values.end());
        std::sort(sorted.begin(), sorted.end());
        Stats s;
        s.count = sorted.size();
        const double n = static_cast<double>(sorted.size());
        // Shifted by the minimum: a constant sample has exactly zero spread.
        const double shift = sorted.front();
        double offset = 0.0;
        for (double v : sorted)
            offset += v - shift;
        offset /= n;
        s.mean = shift + offset;
        double ss = 0.0;
        for (double v : sorted)
            ss += (v - shift - offset) * (v - shift - offset);
        s.std = std::sqrt(ss / n);
        s.min = sorted.front();
        s.max = sorted.back();
        const std::size_t mid = sorted.size() / 2;
        s.median = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
        return s;
    }

    SummaryReport summarize(const MetricSeries &series)
    {
        if (series.records.empty())
            throw Error(ErrorKind::empty_input, "empty metric series");

        SummaryReport r;
        r.geometry = series.geometry;
        r.rho_linear = series.rho.linear();
        r.rho_db = series.rho.db();
        r.capacity_ref_gain_db = series.capacity_ref_gain_db;
        r.rss_offset_db = series.rss_offset_db;
        r.n_elements = series.n_elements;
        r.n_snapshots = series.records.size();

        for (const auto &rec : series.records)
            if (std::find(r.interval_ids.begin(), r.interval_ids.end(), rec.interval_id) == r.interval_ids.end())
                r.interval_ids.push_back(rec.interval_id);
        std::sort(r.interval_ids.begin(), r.interval_ids.end());

        r.elements.resize(series.n_elements);
        for (std::size_t i = 0; i < series.n_elements; ++i)
        {
            std::vector<double> rss, k;
            ElementSummary &e = r.elements[i];
            for (const auto &rec : series.records)
            {
                if (rec.rss_dbm[i])
                    rss.push_back(*rec.rss_dbm[i]);
                else
                    ++e.rss_markers;
                if (rec.k_db[i])
                    k.push_back(*rec.k_db[i]);
                else
                    ++e.k_markers;
            }
            if (!rss.empty())
            {
                const Stats s = describe(rss);
                e.mean_rss_dbm = s.mean;
                e.p2p_rss_db = s.max - s.min;
            }
            if (!k.empty())
                e.mean_k_db = describe(k).mean;
        }

        std::vector<double> c, cn, branch;
        for (const auto &rec : series.records)
        {
            c.push_back(rec.capacity);
            branch.push_back(rec.mean_branch_capacity);
            if (rec.normalized_capacity)
                cn.push_back(*rec.normalized_capacity);
            else
                ++r.normalized_capacity_markers;
            if (!rec.k_linear)
                ++r.k_reference_markers;
        }
        r.capacity = describe(c);
        if (!cn.empty())
            r.normalized_capacity = describe(cn);
        const double branch_mean = describe(branch).mean;
        if (branch_mean > 0.0)
            r.normalized_capacity_ratio_of_means = r.capacity.mean / branch_mean;
        return r;
    }

    namespace
    {
        std::string winner(double a, double b, const std::string &label_a, const std::string &label_b)
        {
            if (a > b) return label_a;
            if (b > a) return label_b;
            return "equal";
        }

        void add_row(Comparison &out, std::string metric, std::optional<double> a, std::optional<double> b)
        {
            if (a && b)
                out.rows.push_back({std::move(metric), *a, *b, *b - *a});
        }
    }

    Comparison compare(const SummaryReport &a, const SummaryReport &b)
    {
        const double scale = std::max({1.0, std::abs(a.rho_linear), std::abs(b.rho_linear)});
        if (std::abs(a.rho_linear - b.rho_linear) > 1e-9 * scale)
            throw Error(ErrorKind::incomparable_reports, "reports were computed at different rho");
        if (a.n_elements != b.n_elements)
            throw Error(ErrorKind::incomparable_reports, "reports have different element counts");

        Comparison out;
        out.label_a = a.geometry.empty() || a.geometry == b.geometry ? "a" : a.geometry;
        out.label_b = b.geometry.empty() || a.geometry == b.geometry ? "b" : b.geometry;

        add_row(out, "capacity_mean_bps_hz", a.capacity.mean, b.capacity.mean);
        add_row(out, "capacity_median_bps_hz", a.capacity.median, b.capacity.median);
        add_row(out, "capacity_std_bps_hz", a.capacity.std, b.capacity.std);
        if (a.normalized_capacity && b.normalized_capacity)
        {
            add_row(out, "normalized_capacity_mean", a.normalized_capacity->mean, b.normalized_capacity->mean);
            add_row(out, "normalized_capacity_std", a.normalized_capacity->std, b.normalized_capacity->std);
        }
        add_row(out, "normalized_capacity_ratio_of_means", a.normalized_capacity_ratio_of_means,
                b.normalized_capacity_ratio_of_means);
        for (std::size_t i = 0; i < a.n_elements; ++i)
        {
            const std::string suffix = ".element_" + std::to_string(i + 1);
            add_row(out, "rss_p2p_db" + suffix, a.elements[i].p2p_rss_db, b.elements[i].p2p_rss_db);
            add_row(out, "rss_mean_dbm" + suffix, a.elements[i].mean_rss_dbm, b.elements[i].mean_rss_dbm);
            add_row(out, "k_mean_db" + suffix, a.elements[i].mean_k_db, b.elements[i].mean_k_db);
        }

        out.higher_capacity = winner(a.capacity.mean, b.capacity.mean, out.label_a, out.label_b);
        if (a.normalized_capacity && b.normalized_capacity)
            out.higher_normalized_capacity =
                winner(a.normalized_capacity->mean, b.normalized_capacity->mean, out.label_a, out.label_b);
        else
            out.higher_normalized_capacity = "undefined";
        return out;
    }
}
