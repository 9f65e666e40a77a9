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

#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "simo/channel.hpp"

namespace simo
{
    inline constexpr double speed_of_light = 299792458.0;

    struct Vec3
    {
        double x = 0.0, y = 0.0, z = 0.0;

        friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
        friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
        friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
        friend bool operator==(const Vec3 &, const Vec3 &) = default;

        double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
        double norm() const { return std::sqrt(dot(*this)); }
        Vec3 normalized() const { return (1.0 / norm()) * *this; }
    };

    inline constexpr Vec3 unit_x{1.0, 0.0, 0.0};
    inline constexpr Vec3 unit_y{0.0, 1.0, 0.0};
    inline constexpr Vec3 unit_z{0.0, 0.0, 1.0};

    /// One receive dipole: phase-centre position (m) and arm axis (unit vector).
    struct ElementPlacement
    {
        Vec3 position;
        Vec3 polarization;
    };

    enum class ArrayKind
    {
        ula,
        pi_shape,
        custom
    };

    std::string_view to_string(ArrayKind kind) noexcept;
    std::optional<ArrayKind> parse_array_kind(std::string_view text) noexcept;

    /// Ordered receive elements; elements()[0] is dipole 1.
    class ArrayLayout
    {
    public:
        /// Validates N >= 2, distinct positions, unit polarizations and, for ULA, collinear uniform spacing.
        ArrayLayout(ArrayKind kind, std::vector<ElementPlacement> elements);

        ArrayKind kind() const noexcept { return kind_; }
        std::size_t size() const noexcept { return elements_.size(); }
        const std::vector<ElementPlacement> &elements() const noexcept { return elements_; }
        const ElementPlacement &element(std::size_t index_1based) const { return elements_.at(index_1based - 1); }
        Vec3 centroid() const;

    private:
        ArrayKind kind_;
        std::vector<ElementPlacement> elements_;
    };

    /// Four collinear elements centred on `centroid`, numbered along `axis`.
    ArrayLayout build_ula(double spacing_m, Vec3 centroid, Vec3 polarization = unit_x, Vec3 axis = unit_x);

    /// Four elements forming a horizontal Π. Elements 2 and 3 sit at the ends of the top bar
    /// (length `top_m`, along x) with arms parallel to the bar; elements 1 and 4 sit at the leg
    /// ends, `leg_m` towards -y, with arms along the legs.
    ArrayLayout build_pi(double leg_m, double top_m, Vec3 centroid);

    enum class Wall
    {
        west,  // x = 0
        east,  // x = width
        south, // y = 0
        north  // y = length
    };

    std::string_view to_string(Wall wall) noexcept;
    std::optional<Wall> parse_wall(std::string_view text) noexcept;

    /// Rectangular room with four reflective walls, origin at the south-west floor corner.
    struct Room
    {
        double width_m = 9.0;
        double length_m = 12.0;
        double height_m = 3.0;

        bool contains(Vec3 p) const;
        /// Wall whose surface holds `p` within `tolerance`, if any.
        std::optional<Wall> wall_at(Vec3 p, double tolerance = 1e-6) const;
    };

    struct ScenarioParams
    {
        Room room;
        Vec3 tx_position{4.5, 3.75, 1.5};
        Vec3 rx_centroid{4.5, 8.25, 1.5};
        Vec3 tx_polarization = unit_x;
        double frequency_hz = 2.4e9;
        double tx_rx_distance_m = 4.5;
        double antenna_height_m = 1.5;
        /// Floor on the polarization match factor; 0 gives the ideal dipole model.
        double polarization_leakage = 0.05;
    };

    class Scenario
    {
    public:
        explicit Scenario(const ScenarioParams &params);

        /// Link along +y starting at (tx_x, tx_y, height); the receiver sits `lateral_offset_m`
        /// to the side so that the separation is still exactly `distance_m`.
        static Scenario along_room(const Room &room, double tx_x, double tx_y, double lateral_offset_m,
                                   double distance_m, double height_m, double frequency_hz,
                                   Vec3 tx_polarization = unit_x, double polarization_leakage = 0.05);

        const ScenarioParams &params() const noexcept { return p_; }
        const Room &room() const noexcept { return p_.room; }
        Vec3 tx_position() const noexcept { return p_.tx_position; }
        Vec3 rx_centroid() const noexcept { return p_.rx_centroid; }
        Vec3 tx_polarization() const noexcept { return p_.tx_polarization; }
        double frequency_hz() const noexcept { return p_.frequency_hz; }
        double wavelength_m() const noexcept { return speed_of_light / p_.frequency_hz; }
        double tx_rx_distance_m() const noexcept { return p_.tx_rx_distance_m; }
        double polarization_leakage() const noexcept { return p_.polarization_leakage; }

    private:
        ScenarioParams p_;
    };

    enum class RayKind
    {
        los,
        replica
    };

    struct RayPath
    {
        RayKind kind = RayKind::los;
        std::optional<Vec3> reflection_point;
        double amplitude_scale = 1.0;
        std::set<std::size_t> blocked_elements; // 1-based
    };

    /// Dipole coupling |p_t⊥ · p_r⊥| where ⊥ removes the component along the propagation
    /// direction. Equals |cos θ| between the arms when both are transverse to the ray.
    double polarization_match(Vec3 tx_polarization, Vec3 rx_polarization, Vec3 direction);

    /// Free-space amplitude λ/(4πd).
    double free_space_amplitude(double distance_m, double wavelength_m);
    double free_space_path_loss_db(double distance_m, double wavelength_m);

    GainVector los_gains(const Scenario &scenario, const ArrayLayout &layout);

    /// Single wall bounce by the image method: the path length to element i is its distance
    /// from the transmitter mirrored in the wall that holds `ray.reflection_point`.
    GainVector replica_gains(const Scenario &scenario, const ArrayLayout &layout, const RayPath &ray);

    /// Replica ray off `wall` whose reflection point is the specular point towards the array centroid.
    RayPath specular_replica(const Scenario &scenario, Wall wall, double amplitude_scale,
                             std::set<std::size_t> blocked_elements = {});
}
