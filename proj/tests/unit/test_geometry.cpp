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

#include <cmath>
#include <numbers>

#include "simo/geometry.hpp"

using namespace simo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    constexpr double wavelength_24 = 0.124913524166666667; // c / 2.4 GHz

    ErrorKind kind_of(auto &&fn)
    {
        try
        {
            fn();
        }
        catch (const Error &e)
        {
            return e.kind();
        }
        FAIL("expected an exception");
        return ErrorKind::invalid_input;
    }

    Scenario vertical_link()
    {
        ScenarioParams p;
        p.tx_position = {1.0, 2.0, 1.5};
        p.rx_centroid = {1.0, 6.5, 1.5};
        p.tx_polarization = unit_z;
        return Scenario(p);
    }
}

TEST_CASE("Geometry - wavelength")
{
    const Scenario s{ScenarioParams{}};
    CHECK_THAT(s.wavelength_m(), WithinRel(wavelength_24, 1e-15));
    CHECK_THAT(s.wavelength_m() / 2.0, WithinAbs(0.06246, 1e-5));
}

TEST_CASE("Geometry - ULA layout")
{
    const double d = wavelength_24 / 2.0;
    const auto ula = build_ula(d, {4.5, 8.25, 1.5});
    REQUIRE(ula.size() == 4);
    CHECK(ula.kind() == ArrayKind::ula);
    for (std::size_t i = 1; i < 4; ++i)
    {
        const Vec3 step = ula.elements()[i].position - ula.elements()[i - 1].position;
        CHECK_THAT(step.x, WithinAbs(d, 1e-15));
        CHECK(step.y == 0.0);
        CHECK(step.z == 0.0);
        CHECK(ula.elements()[i].polarization == unit_x);
    }
    CHECK_THAT(ula.centroid().x, WithinAbs(4.5, 1e-12));
    CHECK_THAT(ula.element(1).position.x, WithinAbs(4.5 - 1.5 * d, 1e-12));

    const auto along_y = build_ula(d, {1.0, 1.0, 1.0}, unit_z, unit_y);
    CHECK_THAT(along_y.element(4).position.y - along_y.element(1).position.y, WithinAbs(3.0 * d, 1e-12));

    CHECK(kind_of([] { build_ula(0.0, {1.0, 1.0, 1.0}); }) == ErrorKind::invalid_geometry);
}

TEST_CASE("Geometry - Pi layout")
{
    const double l = wavelength_24;
    const auto pi = build_pi(l, l, {4.5, 8.25, 1.5});
    REQUIRE(pi.size() == 4);
    CHECK(pi.kind() == ArrayKind::pi_shape);

    // Top-bar elements 2, 3 co-polarized with an x-directed transmitter; legs 1, 4 perpendicular.
    CHECK(pi.element(2).polarization == unit_x);
    CHECK(pi.element(3).polarization == unit_x);
    CHECK(pi.element(1).polarization.dot(unit_x) == 0.0);
    CHECK(pi.element(4).polarization.dot(unit_x) == 0.0);

    CHECK_THAT((pi.element(2).position - pi.element(1).position).norm(), WithinAbs(l, 1e-12));
    CHECK_THAT((pi.element(3).position - pi.element(2).position).norm(), WithinAbs(l, 1e-12));
    CHECK_THAT((pi.element(4).position - pi.element(3).position).norm(), WithinAbs(l, 1e-12));
    CHECK_THAT((pi.element(4).position - pi.element(1).position).norm(), WithinAbs(l, 1e-12));
    CHECK(pi.element(1).position.x < pi.element(4).position.x);
}

TEST_CASE("Geometry - ArrayLayout validation")
{
    const Vec3 p{1.0, 1.0, 1.0};
    CHECK(kind_of([&] { ArrayLayout(ArrayKind::custom, {{p, unit_x}}); }) == ErrorKind::invalid_geometry);
    CHECK(kind_of([&] { ArrayLayout(ArrayKind::custom, {{p, unit_x}, {p, unit_x}}); }) ==
          ErrorKind::invalid_geometry);
    CHECK(kind_of([&] { ArrayLayout(ArrayKind::custom, {{p, unit_x}, {{2.0, 1.0, 1.0}, Vec3{2.0, 0.0, 0.0}}}); }) ==
          ErrorKind::invalid_geometry);
    // ULA kind insists on uniform collinear spacing.
    CHECK(kind_of([] {
              ArrayLayout(ArrayKind::ula, {{{0.0, 0.0, 0.0}, unit_x}, {{1.0, 0.0, 0.0}, unit_x}, {{3.0, 0.0, 0.0}, unit_x}});
          }) == ErrorKind::invalid_geometry);
    CHECK(kind_of([] {
              ArrayLayout(ArrayKind::ula, {{{0.0, 0.0, 0.0}, unit_x}, {{1.0, 0.0, 0.0}, unit_x}, {{2.0, 0.5, 0.0}, unit_x}});
          }) == ErrorKind::invalid_geometry);
}

TEST_CASE("Geometry - scenario validation")
{
    ScenarioParams p;
    p.tx_position = {-1.0, 3.75, 1.5};
    CHECK(kind_of([&] { Scenario{p}; }) == ErrorKind::invalid_geometry);

    p = ScenarioParams{};
    p.tx_rx_distance_m = 5.0;
    CHECK(kind_of([&] { Scenario{p}; }) == ErrorKind::invalid_geometry);

    p = ScenarioParams{};
    p.polarization_leakage = 1.5;
    CHECK(kind_of([&] { Scenario{p}; }) == ErrorKind::invalid_geometry);

    const auto s = Scenario::along_room(Room{}, 0.6, 3.75, -0.27, 4.5, 1.5, 2.4e9);
    CHECK_THAT((s.rx_centroid() - s.tx_position()).norm(), WithinAbs(4.5, 1e-12));
    CHECK_THAT(s.rx_centroid().x, WithinAbs(0.33, 1e-12));
    CHECK(kind_of([] { Scenario::along_room(Room{}, 0.6, 3.75, 5.0, 4.5, 1.5, 2.4e9); }) ==
          ErrorKind::invalid_geometry);
}

TEST_CASE("Geometry - polarization match")
{
    CHECK(polarization_match(unit_x, unit_x, unit_y) == 1.0);
    CHECK(polarization_match(unit_x, unit_y, unit_z) == 0.0);
    CHECK(polarization_match(unit_x, unit_z, unit_y) == 0.0);
    // A receive arm along the ray couples nothing.
    CHECK(polarization_match(unit_y, unit_y, unit_y) == 0.0);
    const Vec3 diag = Vec3{1.0, 0.0, 1.0}.normalized();
    CHECK_THAT(polarization_match(unit_x, diag, unit_y), WithinAbs(std::sqrt(0.5), 1e-15));
}

TEST_CASE("Geometry - free-space LoS gain at 4.5 m")
{
    CHECK_THAT(free_space_amplitude(4.5, wavelength_24), WithinRel(0.00220895609223932512, 1e-14));
    const double pl = free_space_path_loss_db(4.5, wavelength_24);
    CHECK_THAT(pl, WithinAbs(53.1162583316, 1e-9));
    // Textbook FSPL: 32.45 + 20 log10(d_km) + 20 log10(f_MHz).
    const double fspl = 32.45 + 20.0 * std::log10(4.5e-3) + 20.0 * std::log10(2400.0);
    CHECK_THAT(pl, WithinAbs(fspl, 0.01));

    const Scenario s{ScenarioParams{}};
    const ArrayLayout one(ArrayKind::custom, {{s.rx_centroid(), unit_x}, {s.rx_centroid() + Vec3{0.0, 0.0, 0.1}, unit_y}});
    const auto h = los_gains(s, one);
    CHECK_THAT(std::abs(h[0]), WithinRel(0.00220895609223932512, 1e-13));
    const double expected_phase = std::remainder(-2.0 * std::numbers::pi * 4.5 / wavelength_24, 2.0 * std::numbers::pi);
    CHECK_THAT(std::arg(h[0]), WithinAbs(expected_phase, 1e-9));
    // Cross-polarized element sits at the leakage floor.
    const double d2 = std::hypot(4.5, 0.1);
    CHECK_THAT(std::abs(h[1]), WithinRel(0.05 * free_space_amplitude(d2, wavelength_24), 1e-12));

    ScenarioParams ideal;
    ideal.polarization_leakage = 0.0;
    const Scenario s0{ideal};
    CHECK(std::abs(los_gains(s0, one)[1]) == 0.0);
}

TEST_CASE("Geometry - LoS gains for the default arrays")
{
    const Scenario s{ScenarioParams{}};
    const auto h = los_gains(s, build_pi(s.wavelength_m(), s.wavelength_m(), s.rx_centroid()));
    CHECK(std::abs(h[1]) > 10.0 * std::abs(h[0]));
    CHECK(std::abs(h[2]) > 10.0 * std::abs(h[3]));

    const ArrayLayout at_tx(ArrayKind::custom, {{s.tx_position(), unit_x}, {s.rx_centroid(), unit_x}});
    CHECK(kind_of([&] { los_gains(s, at_tx); }) == ErrorKind::singular_geometry);
}

TEST_CASE("Geometry - replica by the image method")
{
    const Scenario s = vertical_link();
    const Vec3 e1{1.0, 2.0 + std::sqrt(32.0), 1.5}; // 6 m from the west-wall image of the transmitter
    const ArrayLayout layout(ArrayKind::custom, {{e1, unit_z}, {s.rx_centroid(), unit_z}});

    RayPath ray;
    ray.kind = RayKind::replica;
    ray.reflection_point = Vec3{0.0, 5.0, 1.5};
    ray.amplitude_scale = 0.5;
    const auto h = replica_gains(s, layout, ray);
    CHECK_THAT(std::abs(h[0]), WithinRel(0.000828358534589747, 1e-12));
    const double expected_phase = std::remainder(-2.0 * std::numbers::pi * 6.0 / s.wavelength_m(), 2.0 * std::numbers::pi);
    CHECK_THAT(std::arg(h[0]), WithinAbs(expected_phase, 1e-9));

    ray.blocked_elements = {1};
    const auto blocked = replica_gains(s, layout, ray);
    CHECK(blocked[0] == cdouble{});
    CHECK(blocked[1] == h[1]);

    ray.amplitude_scale = 0.0;
    CHECK(replica_gains(s, layout, ray).total_power() == 0.0);
}

TEST_CASE("Geometry - replica errors")
{
    const Scenario s = vertical_link();
    const ArrayLayout layout(ArrayKind::custom, {{{1.0, 6.0, 1.5}, unit_z}, {s.rx_centroid(), unit_z}});
    RayPath ray;
    CHECK(kind_of([&] { replica_gains(s, layout, ray); }) == ErrorKind::invalid_ray);
    ray.kind = RayKind::replica;
    CHECK(kind_of([&] { replica_gains(s, layout, ray); }) == ErrorKind::invalid_ray);
    ray.reflection_point = Vec3{0.5, 5.0, 1.5};
    CHECK(kind_of([&] { replica_gains(s, layout, ray); }) == ErrorKind::invalid_ray);
    ray.reflection_point = Vec3{0.0, 5.0, 1.5};
    ray.amplitude_scale = -1.0;
    CHECK(kind_of([&] { replica_gains(s, layout, ray); }) == ErrorKind::invalid_ray);
    ray.amplitude_scale = 0.5;
    ray.blocked_elements = {3};
    CHECK(kind_of([&] { replica_gains(s, layout, ray); }) == ErrorKind::invalid_ray);
}

TEST_CASE("Geometry - specular replica point")
{
    const Scenario s = vertical_link();
    const auto ray = specular_replica(s, Wall::west, 0.5);
    REQUIRE(ray.reflection_point);
    CHECK(ray.reflection_point->x == 0.0);
    // Image at x = -1 and target at x = 1: the crossing is halfway along y.
    CHECK_THAT(ray.reflection_point->y, WithinAbs(4.25, 1e-12));
    CHECK(s.room().wall_at(*ray.reflection_point) == Wall::west);

    // The specular path length equals the image distance.
    const Vec3 p = *ray.reflection_point;
    const double via_wall = (p - s.tx_position()).norm() + (s.rx_centroid() - p).norm();
    CHECK_THAT(via_wall, WithinAbs((s.rx_centroid() - Vec3{-1.0, 2.0, 1.5}).norm(), 1e-12));
}

TEST_CASE("Geometry - enum text")
{
    CHECK(parse_array_kind("ula") == ArrayKind::ula);
    CHECK(parse_array_kind("pi") == ArrayKind::pi_shape);
    CHECK_FALSE(parse_array_kind("PI").has_value());
    CHECK(parse_wall(to_string(Wall::north)) == Wall::north);
}
