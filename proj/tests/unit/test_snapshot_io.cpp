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

#include <clocale>
#include <random>

#include "simo/config.hpp"
#include "simo/number_format.hpp"
#include "simo/snapshot_io.hpp"

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

    GainSnapshotFile random_file(std::mt19937_64 &rng)
    {
        std::uniform_int_distribution<std::size_t> n_el(1, 6), n_snap(1, 30), gap(0, 3);
        std::uniform_real_distribution<double> mant(-9.99, 9.99);
        std::uniform_int_distribution<int> expo(-9, 3);
        std::bernoulli_distribution rare(0.1);
        const std::size_t n = n_el(rng);
        GainSnapshotFile f;
        std::size_t interval = 1, snapshot = 0;
        for (std::size_t k = n_snap(rng); k > 0; --k)
        {
            if (rare(rng))
            {
                interval += 1 + gap(rng);
                snapshot = gap(rng);
            }
            else
                snapshot += 1 + gap(rng);
            GainFileRow row;
            row.interval_id = interval;
            row.snapshot_idx = snapshot;
            row.time_ms = text::quantize9(mant(rng) * 100.0);
            for (std::size_t i = 0; i < n; ++i)
            {
                const cdouble h = rare(rng) ? cdouble{}
                                            : cdouble{text::quantize9(mant(rng) * std::pow(10.0, expo(rng))),
                                                      text::quantize9(mant(rng) * std::pow(10.0, expo(rng)))};
                row.gains.push_back(h);
                row.rss_dbm.push_back(h == cdouble{} ? std::nullopt
                                                     : std::optional<double>(text::quantize9(mant(rng) * 10.0)));
            }
            f.snapshots.push_back(std::move(row));
        }
        return f;
    }

    std::string sample_file()
    {
        return "interval,snapshot,t_ms,element,h_re,h_im,rss_dbm\n"
               "1,0,0,1,0.001,0,-68\n"
               "1,0,0,2,0,0.002,-61.9794001\n"
               "1,1,4,1,0.001,0,-68\n"
               "1,1,4,2,0,0,below_floor\n";
    }
}

TEST_CASE("Number text")
{
    CHECK(text::sig9(0.1) == "0.1");
    CHECK(text::sig9(-61.11625833163) == "-61.1162583");
    CHECK(text::sig9(0.00220895609223932512) == "0.00220895609");
    CHECK(text::sig9(1995.26231496887879) == "1995.26231");
    CHECK(text::sig9(1.5e-12) == "1.5e-12");
    CHECK(text::exact(0.1) == "0.1");
    CHECK(text::exact(2.4e9) == "2.4e+09");
    CHECK(*text::parse_double("1e-3") == 1e-3);
    CHECK_FALSE(text::parse_double("1,5").has_value());
    CHECK_FALSE(text::parse_double(" 1").has_value());
    CHECK_FALSE(text::parse_double("").has_value());
    CHECK_FALSE(text::parse_size("-1").has_value());

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int k = 0; k < 1000; ++k)
    {
        const double v = u(rng);
        REQUIRE(*text::parse_double(text::exact(v)) == v);
        const double q = text::quantize9(v);
        REQUIRE(text::quantize9(q) == q);
        REQUIRE(std::abs(q - v) <= 5e-9 * std::abs(v));
    }
}

TEST_CASE("Snapshot file - default simulation layout")
{
    const auto config = default_run_config(ArrayKind::ula);
    const auto records = simulate(build_inputs(config));
    const auto file = make_gain_file(records, config.tx_power_dbm);
    const auto text = format_gain_file(file);

    std::size_t lines = 0;
    for (char ch : text)
        lines += ch == '\n';
    CHECK(lines == 801);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.rfind(std::string(gain_file_header) + "\n", 0) == 0);
    CHECK_THAT(text, ContainsSubstring("\n1,1,4,1,"));
    CHECK_THAT(text, ContainsSubstring("\n2,99,396,4,"));
    CHECK(parse_gain_file(text) == file);
    CHECK(file.n_elements() == 4);
    CHECK_THAT(*infer_tx_power_dbm(file), WithinAbs(-8.0, 1e-6));
}

TEST_CASE("Snapshot file - parse of format is the identity")
{
    std::mt19937_64 rng(31337);
    for (int k = 0; k < 300; ++k)
    {
        const auto f = random_file(rng);
        const auto text = format_gain_file(f);
        REQUIRE(parse_gain_file(text) == f);
        REQUIRE(format_gain_file(parse_gain_file(text)) == text);
    }
}

TEST_CASE("Snapshot file - accepts the canonical sample")
{
    const auto f = parse_gain_file(sample_file());
    REQUIRE(f.snapshots.size() == 2);
    CHECK(f.n_elements() == 2);
    CHECK(f.snapshots[1].gains[1] == cdouble{});
    CHECK_FALSE(f.snapshots[1].rss_dbm[1].has_value());
    const auto snaps = to_gain_snapshots(f);
    CHECK(snaps[1].time_ms == 4.0);
    CHECK(snaps[0].gains[1] == cdouble(0.0, 0.002));
}

TEST_CASE("Snapshot file - strict reader")
{
    const std::string head = "interval,snapshot,t_ms,element,h_re,h_im,rss_dbm\n";
    struct Case
    {
        std::string text;
        std::size_t line;
    };
    const std::vector<Case> cases = {
        {"", 1},
        {head, 1},
        {"interval,snapshot,t,element,h_re,h_im,rss_dbm\n1,0,0,1,1,0,-8\n", 1},
        // truncated: the last snapshot lacks element 2
        {head + "1,0,0,1,1,0,-8\n1,0,0,2,1,0,-8\n1,1,4,1,1,0,-8\n", 4},
        // element skipped
        {head + "1,0,0,1,1,0,-8\n1,0,0,3,1,0,-8\n", 3},
        // snapshot out of order
        {head + "1,1,4,1,1,0,-8\n1,0,0,1,1,0,-8\n", 3},
        // repeated snapshot
        {head + "1,0,0,1,1,0,-8\n1,0,0,1,1,0,-8\n", 3},
        // later snapshot with too many elements
        {head + "1,0,0,1,1,0,-8\n1,1,4,1,1,0,-8\n1,1,4,2,1,0,-8\n", 4},
        // starts mid-snapshot
        {head + "1,0,0,2,1,0,-8\n", 2},
        {head + "1,0,0,1,1,0\n", 2},
        {head + "1,0,0,1,1,x,-8\n", 2},
        {head + "1,0,0,1,1,0,nan\n", 2},
        {head + "1,0,0,1,1,0,-8\r\n", 2},
        {head + "0,0,0,1,1,0,-8\n", 2},
        {head + "1,0,0,1,1,0,-8\n1,0,1,2,1,0,-8\n", 3},
        {head + "1,0,0,1,1 ,0,-8\n", 2},
    };
    for (const auto &c : cases)
    {
        CAPTURE(c.text);
        const auto e = error_of([&] { parse_gain_file(c.text); });
        CHECK(e.kind() == ErrorKind::malformed_input);
        CHECK(e.line() == c.line);
        CHECK_THAT(std::string(e.what()), ContainsSubstring("line " + std::to_string(c.line)));
    }
}

TEST_CASE("Snapshot file - locale independence")
{
    const char *previous = std::setlocale(LC_ALL, nullptr);
    const std::string saved = previous ? previous : "C";
    const auto f = parse_gain_file(sample_file());
    const auto reference = format_gain_file(f);
    for (const char *name : {"de_DE.UTF-8", "fr_FR.UTF-8", "C.UTF-8"})
        if (std::setlocale(LC_ALL, name))
        {
            CHECK(format_gain_file(f) == reference);
            CHECK(parse_gain_file(reference) == f);
        }
    std::setlocale(LC_ALL, saved.c_str());
}

TEST_CASE("IQ file")
{
    auto config = default_run_config(ArrayKind::ula);
    config.intervals = 1;
    config.snapshots_per_interval = 2;
    config.samples_per_snapshot = 8;
    const auto records = simulate(build_inputs(config), {1, true});
    const auto text = format_iq_file(records);
    CHECK(text.rfind(std::string(iq_file_header) + "\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : text)
        lines += ch == '\n';
    CHECK(lines == 1 + 2 * 4 * 8);
    CHECK_THAT(text, ContainsSubstring("\n1,1,4,7,"));
}
