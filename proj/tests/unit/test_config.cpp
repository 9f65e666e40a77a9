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

#include "catch_amalgamated.hpp"

#include <random>

#include "simo/config.hpp"

using namespace simo;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace
{
    Error error_of(auto &&fn)
    {
        try
        {
            fn();
        }
        catch (const Error &e)
        {
            return e;
        }
        FAIL("expected an exception");
        return Error(ErrorKind::invalid_input, "");
    }

    RunConfig random_config(std::mt19937_64 &rng)
    {
        std::uniform_real_distribution<double> u(-1e3, 1e3);
        std::uniform_int_distribution<std::size_t> n(1, 500);
        std::bernoulli_distribution coin(0.5);
        RunConfig c = default_run_config(coin(rng) ? ArrayKind::ula : ArrayKind::pi_shape);
        for (double *v : {&c.frequency_hz, &c.room_width_m, &c.tx_x_m, &c.rx_lateral_offset_m, &c.polarization_leakage,
                          &c.ula_spacing_wavelengths, &c.pi_leg_wavelengths, &c.replica_reflection_coefficient,
                          &c.amplitude_sigma_db, &c.replica_phase_jitter_rad, &c.chain_gain_db, &c.tx_power_dbm,
                          &c.tone_offset_hz, &c.snapshot_dt_ms})
            *v = u(rng) * std::pow(10.0, std::uniform_int_distribution<int>(-12, 12)(rng));
        c.intervals = n(rng);
        c.samples_per_snapshot = n(rng);
        c.seed = rng();
        c.noise_enabled = coin(rng);
        c.replica_enabled = coin(rng);
        c.replica_wall = coin(rng) ? Wall::east : Wall::south;
        c.tx_polarization = coin(rng) ? unit_z : Vec3{u(rng), u(rng), u(rng)};
        c.replica_blocked_elements.clear();
        for (std::size_t i = 1; i <= 4; ++i)
            if (coin(rng))
                c.replica_blocked_elements.insert(i);
        return c;
    }
}

TEST_CASE("Config - defaults build and use half-wavelength ULA spacing")
{
    const auto ula = build_inputs(default_run_config(ArrayKind::ula));
    const auto step = ula.layout.element(2).position - ula.layout.element(1).position;
    CHECK_THAT(step.norm(), WithinAbs(0.0624567620833333, 1e-15));
    CHECK(ula.replica.has_value());
    CHECK(ula.config.snapshots_per_interval == 100);
    CHECK(ula.config.intervals == 2);

    const auto pi = build_inputs(default_run_config(ArrayKind::pi_shape));
    CHECK(pi.layout.kind() == ArrayKind::pi_shape);
    REQUIRE(pi.replica.has_value());
    CHECK(pi.replica->blocked_elements == std::set<std::size_t>{4});
    CHECK(pi.replica->reflection_point->x == 0.0);

    CHECK_THROWS_AS(default_run_config(ArrayKind::custom), Error);
}

TEST_CASE("Config - one-wavelength ULA override")
{
    const auto c = parse_run_config("geometry = ula\nula_spacing_wavelengths = 1\n");
    const auto in = build_inputs(c);
    const auto step = in.layout.element(2).position - in.layout.element(1).position;
    CHECK_THAT(step.norm(), WithinAbs(0.124913524166666667, 1e-15));
}

TEST_CASE("Config - text form")
{
    const std::string text = "# campaign\n"
                             "geometry = pi   # array\n"
                             "\n"
                             "seed=17\r\n"
                             "  replica_blocked_elements = 1, 4\n"
                             "noise_enabled = false\n"
                             "tx_polarization = z\n";
    const auto c = parse_run_config(text);
    CHECK(c.geometry == ArrayKind::pi_shape);
    CHECK(c.seed == 17);
    CHECK(c.replica_blocked_elements == std::set<std::size_t>{1, 4});
    CHECK_FALSE(c.noise_enabled);
    CHECK(c.tx_polarization == unit_z);
    // Unlisted keys keep the Pi defaults.
    CHECK(c.amplitude_sigma_db == default_run_config(ArrayKind::pi_shape).amplitude_sigma_db);

    const auto f = format_run_config(default_run_config(ArrayKind::ula));
    CHECK_THAT(f, ContainsSubstring("\ngeometry = ula\n"));
    CHECK_THAT(f, ContainsSubstring("\nfrequency_hz = 2.4e+09\n"));
    CHECK_THAT(f, ContainsSubstring("\nreplica_blocked_elements = none\n"));
    CHECK(f.find('\r') == std::string::npos);
}

TEST_CASE("Config - unknown and malformed entries")
{
    auto e = error_of([] { parse_run_config("geometry = ula\nsnr=33\n"); });
    CHECK(e.kind() == ErrorKind::malformed_config);
    CHECK(e.line() == 2);
    CHECK_THAT(std::string(e.what()), ContainsSubstring("'snr'"));

    e = error_of([] { parse_run_config("seed = 1\nseed = 2\n"); });
    CHECK(e.kind() == ErrorKind::malformed_config);
    CHECK(e.line() == 2);

    e = error_of([] { parse_run_config("seed 1\n"); });
    CHECK(e.kind() == ErrorKind::malformed_config);
    CHECK(e.line() == 1);

    for (const char *bad : {"seed = -1", "seed = 1.5", "tx_power_dbm = abc", "tx_power_dbm = nan",
                            "noise_enabled = yes", "replica_wall = up", "geometry = custom",
                            "replica_blocked_elements = 0", "tx_polarization = 1,0", "intervals = "})
    {
        e = error_of([&] { parse_run_config(bad); });
        CHECK(e.kind() == ErrorKind::malformed_config);
    }
}

TEST_CASE("Config - round trip")
{
    for (auto kind : {ArrayKind::ula, ArrayKind::pi_shape})
    {
        const auto c = default_run_config(kind);
        const auto text = format_run_config(c);
        CHECK(parse_run_config(text) == c);
        CHECK(format_run_config(parse_run_config(text)) == text);
    }

    std::mt19937_64 rng(2026);
    for (int k = 0; k < 300; ++k)
    {
        const auto c = random_config(rng);
        const auto text = format_run_config(c);
        REQUIRE(parse_run_config(text) == c);
        REQUIRE(format_run_config(parse_run_config(text)) == text);
    }
}

TEST_CASE("Config - invalid physical values fail at build time")
{
    auto c = default_run_config(ArrayKind::ula);
    c.tx_x_m = -2.0;
    CHECK(error_of([&] { build_inputs(c); }).kind() == ErrorKind::invalid_geometry);
    c = default_run_config(ArrayKind::ula);
    c.sample_rate_hz = 1.0;
    CHECK(error_of([&] { build_inputs(c); }).kind() == ErrorKind::invalid_input);
    c = default_run_config(ArrayKind::pi_shape);
    c.replica_blocked_elements = {5};
    c.replica_enabled = true;
    CHECK(error_of([&] { build_inputs(c); }).kind() == ErrorKind::invalid_ray);
}
