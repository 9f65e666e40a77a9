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

#include "simo/report_io.hpp"

#include "json.hpp"

#include "simo/error.hpp"
#include "simo/number_format.hpp"

namespace simo
{
    namespace
    {
        using json = nlohmann::ordered_json;

        constexpr std::string_view no_reference_marker = "no_reference";
        constexpr std::string_view floor_marker = "below_floor";
        constexpr std::string_view undefined_marker = "undefined";

        json optional_number(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

        json stats_json(const Stats &s)
        {
            return json{{"count", s.count}, {"mean", s.mean},     {"std", s.std},
                        {"median", s.median}, {"min", s.min}, {"max", s.max}};
        }

        const json &member(const json &j, const char *key)
        {
            if (!j.is_object() || !j.contains(key))
                throw Error(ErrorKind::malformed_input, std::string("report: missing member '") + key + "'");
            return j.at(key);
        }

        double number(const json &j, const char *key)
        {
            const auto &v = member(j, key);
            if (!v.is_number())
                throw Error(ErrorKind::malformed_input, std::string("report: member '") + key + "' is not a number");
            return v.get<double>();
        }

        std::size_t count(const json &j, const char *key)
        {
            const auto &v = member(j, key);
            if (!v.is_number_unsigned())
                throw Error(ErrorKind::malformed_input,
                            std::string("report: member '") + key + "' is not a non-negative integer");
            return v.get<std::size_t>();
        }

        std::string string(const json &j, const char *key)
        {
            const auto &v = member(j, key);
            if (!v.is_string())
                throw Error(ErrorKind::malformed_input, std::string("report: member '") + key + "' is not a string");
            return v.get<std::string>();
        }

        std::optional<double> optional_number(const json &j, const char *key)
        {
            if (member(j, key).is_null())
                return std::nullopt;
            return number(j, key);
        }

        Stats parse_stats(const json &j)
        {
            return {count(j, "count"),  number(j, "mean"), number(j, "std"),
                    number(j, "median"), number(j, "min"), number(j, "max")};
        }

        std::string cell(const std::optional<double> &v, std::string_view marker)
        {
            return v ? text::sig9(*v) : std::string(marker);
        }

        std::string row_prefix(const MetricRecord &r)
        {
            return std::to_string(r.interval_id) + ',' + std::to_string(r.snapshot_idx) + ',' + text::sig9(r.time_ms);
        }
    }

    std::string format_report(const SummaryReport &r)
    {
        json config = json::object();
        for (const auto &[k, v] : r.config)
            config[k] = v;

        json rss = json::array();
        json k = json::array();
        for (std::size_t i = 0; i < r.elements.size(); ++i)
        {
            const auto &e = r.elements[i];
            rss.push_back({{"element", i + 1},
                           {"mean_dbm", optional_number(e.mean_rss_dbm)},
                           {"p2p_db", optional_number(e.p2p_rss_db)},
                           {"markers", e.rss_markers}});
            k.push_back({{"element", i + 1}, {"mean_db", optional_number(e.mean_k_db)}, {"markers", e.k_markers}});
        }

        json j;
        j["tool"] = "simo-sounder";
        j["tool_version"] = r.tool_version;
        j["geometry"] = r.geometry;
        j["config"] = config;
        j["analysis"] = {{"rho_db", r.rho_db},
                         {"rho_linear", r.rho_linear},
                         {"capacity_ref_gain_db", r.capacity_ref_gain_db},
                         {"rss_offset_db", r.rss_offset_db},
                         {"n_elements", r.n_elements},
                         {"n_snapshots", r.n_snapshots},
                         {"interval_ids", r.interval_ids}};
        j["rss"] = rss;
        j["k_ratios"] = {{"reference_markers", r.k_reference_markers}, {"elements", k}};
        j["capacity"] = stats_json(r.capacity);
        j["normalized_capacity"] = {
            {"per_snapshot", r.normalized_capacity ? stats_json(*r.normalized_capacity) : json(nullptr)},
            {"ratio_of_means", optional_number(r.normalized_capacity_ratio_of_means)},
            {"markers", r.normalized_capacity_markers}};
        return j.dump(2) + "\n";
    }

    SummaryReport parse_report(std::string_view text)
    {
        json j;
        try
        {
            j = json::parse(text);
        }
        catch (const json::exception &e)
        {
            throw Error(ErrorKind::malformed_input, std::string("report: ") + e.what());
        }

        try
        {
            SummaryReport r;
            if (string(j, "tool") != "simo-sounder")
                throw Error(ErrorKind::malformed_input, "report: not a simo-sounder report");
            r.tool_version = string(j, "tool_version");
            r.geometry = string(j, "geometry");

            const auto &config = member(j, "config");
            if (!config.is_object())
                throw Error(ErrorKind::malformed_input, "report: 'config' is not an object");
            for (const auto &[key, value] : config.items())
            {
                if (!value.is_string())
                    throw Error(ErrorKind::malformed_input, "report: config value '" + key + "' is not a string");
                r.config.emplace_back(key, value.get<std::string>());
            }

            const auto &a = member(j, "analysis");
            r.rho_db = number(a, "rho_db");
            r.rho_linear = number(a, "rho_linear");
            r.capacity_ref_gain_db = number(a, "capacity_ref_gain_db");
            r.rss_offset_db = number(a, "rss_offset_db");
            r.n_elements = count(a, "n_elements");
            r.n_snapshots = count(a, "n_snapshots");
            const auto &ids = member(a, "interval_ids");
            if (!ids.is_array())
                throw Error(ErrorKind::malformed_input, "report: 'interval_ids' is not an array");
            for (const auto &id : ids)
            {
                if (!id.is_number_unsigned())
                    throw Error(ErrorKind::malformed_input, "report: bad interval id");
                r.interval_ids.push_back(id.get<std::size_t>());
            }

            const auto &rss = member(j, "rss");
            const auto &kr = member(j, "k_ratios");
            const auto &k = member(kr, "elements");
            if (!rss.is_array() || !k.is_array() || rss.size() != r.n_elements || k.size() != r.n_elements)
                throw Error(ErrorKind::malformed_input, "report: per-element sections do not match n_elements");
            r.k_reference_markers = count(kr, "reference_markers");
            for (std::size_t i = 0; i < r.n_elements; ++i)
            {
                if (count(rss[i], "element") != i + 1 || count(k[i], "element") != i + 1)
                    throw Error(ErrorKind::malformed_input, "report: element entries out of order");
                ElementSummary e;
                e.mean_rss_dbm = optional_number(rss[i], "mean_dbm");
                e.p2p_rss_db = optional_number(rss[i], "p2p_db");
                e.rss_markers = count(rss[i], "markers");
                e.mean_k_db = optional_number(k[i], "mean_db");
                e.k_markers = count(k[i], "markers");
                r.elements.push_back(e);
            }

            r.capacity = parse_stats(member(j, "capacity"));
            const auto &nc = member(j, "normalized_capacity");
            if (!member(nc, "per_snapshot").is_null())
                r.normalized_capacity = parse_stats(nc.at("per_snapshot"));
            r.normalized_capacity_ratio_of_means = optional_number(nc, "ratio_of_means");
            r.normalized_capacity_markers = count(nc, "markers");
            return r;
        }
        catch (const json::exception &e)
        {
            throw Error(ErrorKind::malformed_input, std::string("report: ") + e.what());
        }
    }

    std::string format_rss_series(const MetricSeries &s)
    {
        std::string out = "interval,snapshot,t_ms";
        for (std::size_t i = 1; i <= s.n_elements; ++i)
            out += ",rss" + std::to_string(i) + "_dbm";
        out += '\n';
        for (const auto &r : s.records)
        {
            out += row_prefix(r);
            for (const auto &v : r.rss_dbm)
                out += ',' + cell(v, floor_marker);
            out += '\n';
        }
        return out;
    }

    std::string format_k_series(const MetricSeries &s)
    {
        std::string out = "interval,snapshot,t_ms";
        for (std::size_t i = 1; i <= s.n_elements; ++i)
            out += ",k" + std::to_string(i) + "1";
        for (std::size_t i = 1; i <= s.n_elements; ++i)
            out += ",k" + std::to_string(i) + "1_db";
        out += '\n';
        for (const auto &r : s.records)
        {
            out += row_prefix(r);
            for (std::size_t i = 0; i < s.n_elements; ++i)
                out += ',' + (r.k_linear ? text::sig9((*r.k_linear)[i]) : std::string(no_reference_marker));
            for (std::size_t i = 0; i < s.n_elements; ++i)
                out += ',' + (r.k_linear ? cell(r.k_db[i], floor_marker) : std::string(no_reference_marker));
            out += '\n';
        }
        return out;
    }

    std::string format_capacity_series(const MetricSeries &s)
    {
        std::string out = "interval,snapshot,t_ms,capacity_bps_hz,mean_branch_capacity_bps_hz\n";
        for (const auto &r : s.records)
            out += row_prefix(r) + ',' + text::sig9(r.capacity) + ',' + text::sig9(r.mean_branch_capacity) + '\n';
        return out;
    }

    std::string format_normalized_capacity_series(const MetricSeries &s)
    {
        std::string out = "interval,snapshot,t_ms,normalized_capacity\n";
        for (const auto &r : s.records)
            out += row_prefix(r) + ',' + cell(r.normalized_capacity, undefined_marker) + '\n';
        return out;
    }

    std::string format_comparison(const Comparison &c)
    {
        std::string out = "# a = " + c.label_a + ", b = " + c.label_b + "\n";
        out += "metric,value_a,value_b,delta,higher\n";
        for (const auto &row : c.rows)
        {
            const std::string higher = row.b > row.a ? c.label_b : (row.a > row.b ? c.label_a : "equal");
            out += row.metric + ',' + text::sig9(row.a) + ',' + text::sig9(row.b) + ',' + text::sig9(row.delta) + ',' +
                   higher + '\n';
        }
        out += "# higher capacity: " + c.higher_capacity + "\n";
        out += "# higher normalized capacity: " + c.higher_normalized_capacity + "\n";
        return out;
    }
}
