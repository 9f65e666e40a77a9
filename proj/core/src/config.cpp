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

#include "simo/config.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>

#include "simo/error.hpp"
#include "simo/number_format.hpp"

namespace simo
{
    namespace
    {
        struct Field
        {
            std::string_view key;
            std::function<std::string(const RunConfig &)> get;
            std::function<bool(RunConfig &, std::string_view)> set; // false: unparseable value
        };

        Field real(std::string_view key, double RunConfig::*member)
        {
            return {key, [member](const RunConfig &c) { return text::exact(c.*member); },
                    [member](RunConfig &c, std::string_view v) {
                        const auto d = text::parse_double(v);
                        if (!d || !std::isfinite(*d))
                            return false;
                        c.*member = *d;
                        return true;
                    }};
        }

        Field count(std::string_view key, std::size_t RunConfig::*member)
        {
            return {key, [member](const RunConfig &c) { return std::to_string(c.*member); },
                    [member](RunConfig &c, std::string_view v) {
                        const auto n = text::parse_size(v);
                        if (!n)
                            return false;
                        c.*member = *n;
                        return true;
                    }};
        }

        Field flag(std::string_view key, bool RunConfig::*member)
        {
            return {key, [member](const RunConfig &c) { return std::string(c.*member ? "true" : "false"); },
                    [member](RunConfig &c, std::string_view v) {
                        if (v == "true")
                            c.*member = true;
                        else if (v == "false")
                            c.*member = false;
                        else
                            return false;
                        return true;
                    }};
        }

        std::string format_vector(Vec3 v)
        {
            if (v == unit_x)
                return "x";
            if (v == unit_y)
                return "y";
            if (v == unit_z)
                return "z";
            return text::exact(v.x) + "," + text::exact(v.y) + "," + text::exact(v.z);
        }

        std::optional<Vec3> parse_vector(std::string_view v)
        {
            if (v == "x")
                return unit_x;
            if (v == "y")
                return unit_y;
            if (v == "z")
                return unit_z;
            const auto parts = text::split(v, ',');
            if (parts.size() != 3)
                return std::nullopt;
            double c[3];
            for (int i = 0; i < 3; ++i)
            {
                const auto d = text::parse_double(text::trim(parts[i]));
                if (!d || !std::isfinite(*d))
                    return std::nullopt;
                c[i] = *d;
            }
            return Vec3{c[0], c[1], c[2]};
        }

        std::string format_index_set(const std::set<std::size_t> &s)
        {
            if (s.empty())
                return "none";
            std::string out;
            for (auto i : s)
                out += (out.empty() ? "" : ",") + std::to_string(i);
            return out;
        }

        std::optional<std::set<std::size_t>> parse_index_set(std::string_view v)
        {
            std::set<std::size_t> out;
            if (v == "none")
                return out;
            for (auto part : text::split(v, ','))
            {
                const auto n = text::parse_size(text::trim(part));
                if (!n || *n == 0 || !out.insert(*n).second)
                    return std::nullopt;
            }
            return out;
        }

        const std::vector<Field> &fields()
        {
            static const std::vector<Field> table = {
                {"geometry", [](const RunConfig &c) { return std::string(to_string(c.geometry)); },
                 [](RunConfig &c, std::string_view v) {
                     const auto k = parse_array_kind(v);
                     if (!k || *k == ArrayKind::custom)
                         return false;
                     c.geometry = *k;
                     return true;
                 }},
                real("frequency_hz", &RunConfig::frequency_hz),
                real("room_width_m", &RunConfig::room_width_m),
                real("room_length_m", &RunConfig::room_length_m),
                real("room_height_m", &RunConfig::room_height_m),
                real("tx_x_m", &RunConfig::tx_x_m),
                real("tx_y_m", &RunConfig::tx_y_m),
                real("rx_lateral_offset_m", &RunConfig::rx_lateral_offset_m),
                real("tx_rx_distance_m", &RunConfig::tx_rx_distance_m),
                real("antenna_height_m", &RunConfig::antenna_height_m),
                {"tx_polarization", [](const RunConfig &c) { return format_vector(c.tx_polarization); },
                 [](RunConfig &c, std::string_view v) {
                     const auto p = parse_vector(v);
                     if (!p)
                         return false;
                     c.tx_polarization = *p;
                     return true;
                 }},
                real("polarization_leakage", &RunConfig::polarization_leakage),
                real("ula_spacing_wavelengths", &RunConfig::ula_spacing_wavelengths),
                real("pi_leg_wavelengths", &RunConfig::pi_leg_wavelengths),
                real("pi_top_wavelengths", &RunConfig::pi_top_wavelengths),
                flag("replica_enabled", &RunConfig::replica_enabled),
                {"replica_wall", [](const RunConfig &c) { return std::string(to_string(c.replica_wall)); },
                 [](RunConfig &c, std::string_view v) {
                     const auto w = parse_wall(v);
                     if (!w)
                         return false;
                     c.replica_wall = *w;
                     return true;
                 }},
                real("replica_reflection_coefficient", &RunConfig::replica_reflection_coefficient),
                {"replica_blocked_elements",
                 [](const RunConfig &c) { return format_index_set(c.replica_blocked_elements); },
                 [](RunConfig &c, std::string_view v) {
                     const auto s = parse_index_set(v);
                     if (!s)
                         return false;
                     c.replica_blocked_elements = *s;
                     return true;
                 }},
                real("amplitude_sigma_db", &RunConfig::amplitude_sigma_db),
                real("phase_jitter_rad", &RunConfig::phase_jitter_rad),
                real("replica_phase_jitter_rad", &RunConfig::replica_phase_jitter_rad),
                real("chain_gain_db", &RunConfig::chain_gain_db),
                real("am_pm_deg_per_db", &RunConfig::am_pm_deg_per_db),
                real("reference_level_dbm", &RunConfig::reference_level_dbm),
                flag("noise_enabled", &RunConfig::noise_enabled),
                real("per_element_snr_db", &RunConfig::per_element_snr_db),
                count("intervals", &RunConfig::intervals),
                count("snapshots_per_interval", &RunConfig::snapshots_per_interval),
                real("snapshot_dt_ms", &RunConfig::snapshot_dt_ms),
                real("tx_power_dbm", &RunConfig::tx_power_dbm),
                count("samples_per_snapshot", &RunConfig::samples_per_snapshot),
                real("sample_rate_hz", &RunConfig::sample_rate_hz),
                real("tone_offset_hz", &RunConfig::tone_offset_hz),
                {"seed", [](const RunConfig &c) { return std::to_string(c.seed); },
                 [](RunConfig &c, std::string_view v) {
                     const auto n = text::parse_size(v);
                     if (!n)
                         return false;
                     c.seed = *n;
                     return true;
                 }},
            };
            return table;
        }

        const Field *find_field(std::string_view key)
        {
            for (const auto &f : fields())
                if (f.key == key)
                    return &f;
            return nullptr;
        }

        struct Entry
        {
            std::string_view key;
            std::string_view value;
            std::size_t line;
        };

        std::vector<Entry> tokenize(std::string_view text)
        {
            std::vector<Entry> entries;
            std::set<std::string_view> seen;
            std::size_t line_no = 0;
            for (auto raw : text::split(text, '\n'))
            {
                ++line_no;
                if (!raw.empty() && raw.back() == '\r')
                    raw.remove_suffix(1);
                const auto hash = raw.find('#');
                auto line = text::trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
                if (line.empty())
                    continue;
                const auto eq = line.find('=');
                if (eq == std::string_view::npos)
                    throw Error(ErrorKind::malformed_config,
                                "line " + std::to_string(line_no) + ": expected 'key = value'", line_no);
                const auto key = text::trim(line.substr(0, eq));
                const auto value = text::trim(line.substr(eq + 1));
                if (!find_field(key))
                    throw Error(ErrorKind::malformed_config,
                                "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'",
                                line_no);
                if (!seen.insert(key).second)
                    throw Error(ErrorKind::malformed_config,
                                "line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'",
                                line_no);
                entries.push_back({key, value, line_no});
            }
            return entries;
        }
    }

    RunConfig default_run_config(ArrayKind geometry)
    {
        RunConfig c;
        c.geometry = geometry;
        c.replica_wall = Wall::west;
        c.replica_reflection_coefficient = 1.0;
        c.polarization_leakage = 0.06;
        switch (geometry)
        {
        case ArrayKind::ula:
            // Link runs close to the west wall; the coherent wall replica spreads the element gains.
            c.tx_x_m = 0.6;
            c.rx_lateral_offset_m = -0.27;
            c.amplitude_sigma_db = 0.35;
            c.replica_phase_jitter_rad = 0.0;
            break;
        case ArrayKind::pi_shape:
            c.tx_x_m = 4.5;
            c.rx_lateral_offset_m = 0.0;
            c.replica_blocked_elements = {4};
            c.amplitude_sigma_db = 0.5;
            c.replica_phase_jitter_rad = std::numbers::pi;
            break;
        case ArrayKind::custom:
            throw Error(ErrorKind::invalid_input, "no default configuration for custom arrays");
        }
        return c;
    }

    RunConfig parse_run_config(std::string_view text, const RunConfig &base)
    {
        RunConfig c = base;
        for (const auto &e : tokenize(text))
            if (!find_field(e.key)->set(c, e.value))
                throw Error(ErrorKind::malformed_config,
                            "line " + std::to_string(e.line) + ": invalid value '" + std::string(e.value) +
                                "' for key '" + std::string(e.key) + "'",
                            e.line);
        return c;
    }

    RunConfig parse_run_config(std::string_view text)
    {
        ArrayKind kind = ArrayKind::ula;
        for (const auto &e : tokenize(text))
            if (e.key == "geometry")
            {
                const auto k = parse_array_kind(e.value);
                if (!k || *k == ArrayKind::custom)
                    throw Error(ErrorKind::malformed_config,
                                "line " + std::to_string(e.line) + ": invalid value '" + std::string(e.value) +
                                    "' for key 'geometry'",
                                e.line);
                kind = *k;
            }
        return parse_run_config(text, default_run_config(kind));
    }

    std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig &config)
    {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto &f : fields())
            out.emplace_back(std::string(f.key), f.get(config));
        return out;
    }

    std::string format_run_config(const RunConfig &config)
    {
        std::string out = "# simo-sounder run configuration\n";
        for (const auto &[k, v] : config_entries(config))
            out += k + " = " + v + "\n";
        return out;
    }

    SimulationInputs build_inputs(const RunConfig &c)
    {
        const Room room{c.room_width_m, c.room_length_m, c.room_height_m};
        Scenario scenario = Scenario::along_room(room, c.tx_x_m, c.tx_y_m, c.rx_lateral_offset_m, c.tx_rx_distance_m,
                                                 c.antenna_height_m, c.frequency_hz, c.tx_polarization,
                                                 c.polarization_leakage);
        const double wl = scenario.wavelength_m();
        ArrayLayout layout = c.geometry == ArrayKind::ula
                                 ? build_ula(c.ula_spacing_wavelengths * wl, scenario.rx_centroid())
                                 : build_pi(c.pi_leg_wavelengths * wl, c.pi_top_wavelengths * wl,
                                            scenario.rx_centroid());
        for (auto idx : c.replica_blocked_elements)
            if (idx < 1 || idx > layout.size())
                throw Error(ErrorKind::invalid_ray, "replica_blocked_elements: no element " + std::to_string(idx));
        std::optional<RayPath> replica;
        if (c.replica_enabled)
            replica = specular_replica(scenario, c.replica_wall, c.replica_reflection_coefficient,
                                       c.replica_blocked_elements);

        FadingModel fading{c.amplitude_sigma_db, c.phase_jitter_rad, c.replica_phase_jitter_rad, c.replica_enabled};
        ReceiverChain chain{c.chain_gain_db, c.am_pm_deg_per_db, c.reference_level_dbm, c.noise_enabled,
                            c.per_element_snr_db};
        SnapshotConfig cfg{c.intervals,       c.snapshots_per_interval, c.snapshot_dt_ms, c.tx_power_dbm,
                           c.samples_per_snapshot, c.sample_rate_hz,  c.tone_offset_hz, c.seed};
        fading.validate();
        chain.validate();
        cfg.validate();
        return {std::move(scenario), std::move(layout), std::move(replica), fading, chain, cfg};
    }
}
