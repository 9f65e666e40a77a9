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
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simo/geometry.hpp"
#include "simo/sounder.hpp"

namespace simo
{
    /// Every simulation parameter as one flat record. Text form is `key = value` per line with `#` comments.
    struct RunConfig
    {
        ArrayKind geometry = ArrayKind::ula;

        double frequency_hz = 2.4e9;
        double room_width_m = 9.0;
        double room_length_m = 12.0;
        double room_height_m = 3.0;
        double tx_x_m = 4.5;
        double tx_y_m = 3.75;
        double rx_lateral_offset_m = 0.0;
        double tx_rx_distance_m = 4.5;
        double antenna_height_m = 1.5;
        Vec3 tx_polarization = unit_x;
        double polarization_leakage = 0.05;

        double ula_spacing_wavelengths = 0.5;
        double pi_leg_wavelengths = 1.0;
        double pi_top_wavelengths = 1.0;

        bool replica_enabled = true;
        Wall replica_wall = Wall::west;
        double replica_reflection_coefficient = 0.5;
        std::set<std::size_t> replica_blocked_elements;

        double amplitude_sigma_db = 0.35;
        double phase_jitter_rad = 0.1;
        double replica_phase_jitter_rad = 0.0;

        double chain_gain_db = 42.0;
        double am_pm_deg_per_db = 0.2;
        double reference_level_dbm = -62.5;
        bool noise_enabled = true;
        double per_element_snr_db = 33.0;

        std::size_t intervals = 2;
        std::size_t snapshots_per_interval = 100;
        double snapshot_dt_ms = 4.0;
        double tx_power_dbm = -8.0;
        std::size_t samples_per_snapshot = 1024;
        double sample_rate_hz = 1.0e6;
        double tone_offset_hz = 1.0e5;
        std::uint64_t seed = 1;

        friend bool operator==(const RunConfig &, const RunConfig &) = default;
    };

    /// Calibrated defaults for the given array kind.
    RunConfig default_run_config(ArrayKind geometry);

    /// Applies the entries in `text` on top of `base`. Unknown or repeated keys, missing '=' and
    /// unparseable values throw ErrorKind::malformed_config carrying the line number.
    RunConfig parse_run_config(std::string_view text, const RunConfig &base);
    /// As above, starting from the defaults of the geometry named in `text` (ULA when absent).
    RunConfig parse_run_config(std::string_view text);

    /// Every key in canonical order, values in shortest round-trip form.
    std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig &config);
    std::string format_run_config(const RunConfig &config);

    /// Builds and validates the simulation objects. Throws the validating module's error kinds.
    SimulationInputs build_inputs(const RunConfig &config);
}
