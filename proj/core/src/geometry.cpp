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

#include "simo/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>

namespace simo
{
    namespace
    {
        bool finite(Vec3 v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }

        Vec3 wall_normal(Wall wall)
        {
            switch (wall)
            {
            case Wall::west:
            case Wall::east: return unit_x;
            case Wall::south:
            case Wall::north: return unit_y;
            }
            return unit_x;
        }

        double wall_offset(const Room &room, Wall wall)
        {
            switch (wall)
            {
            case Wall::west: return 0.0;
            case Wall::east: return room.width_m;
            case Wall::south: return 0.0;
            case Wall::north: return room.length_m;
            }
            return 0.0;
        }

        // Mirror image of `p` in the wall plane.
        Vec3 mirror(const Room &room, Wall wall, Vec3 p)
        {
            const Vec3 n = wall_normal(wall);
            const double signed_distance = p.dot(n) - wall_offset(room, wall);
            return p - (2.0 * signed_distance) * n;
        }

        // Reflected dipole orientation: flip the normal component.
        Vec3 mirror_direction(Wall wall, Vec3 v)
        {
            const Vec3 n = wall_normal(wall);
            return v - (2.0 * v.dot(n)) * n;
        }

        cdouble path_gain(double distance, double wavelength, double match)
        {
            const double phase = -2.0 * std::numbers::pi * distance / wavelength;
            return std::polar(free_space_amplitude(distance, wavelength) * match, phase);
        }
    }

    std::string_view to_string(ArrayKind kind) noexcept
    {
        switch (kind)
        {
        case ArrayKind::ula: return "ula";
        case ArrayKind::pi_shape: return "pi";
        case ArrayKind::custom: return "custom";
        }
        return "custom";
    }

    std::optional<ArrayKind> parse_array_kind(std::string_view text) noexcept
    {
        if (text == "ula") return ArrayKind::ula;
        if (text == "pi") return ArrayKind::pi_shape;
        if (text == "custom") return ArrayKind::custom;
        return std::nullopt;
    }

    std::string_view to_string(Wall wall) noexcept
    {
        switch (wall)
        {
        case Wall::west: return "west";
        case Wall::east: return "east";
        case Wall::south: return "south";
        case Wall::north: return "north";
        }
        return "west";
    }

    std::optional<Wall> parse_wall(std::string_view text) noexcept
    {
        if (text == "west") return Wall::west;
        if (text == "east") return Wall::east;
        if (text == "south") return Wall::south;
        if (text == "north") return Wall::north;
        return std::nullopt;
    }

    // ----- ArrayLayout ------------------------------------------------------

    ArrayLayout::ArrayLayout(ArrayKind kind, std::vector<ElementPlacement> elements)
        : kind_(kind), elements_(std::move(elements))
    {
        if (elements_.size() < 2)
            throw Error(ErrorKind::invalid_geometry, "an array needs at least two elements");

        for (std::size_t i = 0; i < elements_.size(); ++i)
        {
            const auto &e = elements_[i];
            if (!finite(e.position) || !finite(e.polarization))
                throw Error(ErrorKind::invalid_geometry, "element " + std::to_string(i + 1) + " is not finite");
            if (std::abs(e.polarization.norm() - 1.0) > 1e-9)
                throw Error(ErrorKind::invalid_geometry,
                            "element " + std::to_string(i + 1) + " polarization is not a unit vector");
            for (std::size_t j = 0; j < i; ++j)
                if ((elements_[j].position - e.position).norm() == 0.0)
                    throw Error(ErrorKind::invalid_geometry, "elements " + std::to_string(j + 1) + " and " +
                                                                 std::to_string(i + 1) + " share a position");
        }

        if (kind_ == ArrayKind::ula)
        {
            const Vec3 step = elements_[1].position - elements_[0].position;
            const double spacing = step.norm();
            for (std::size_t i = 1; i < elements_.size(); ++i)
            {
                const Vec3 d = elements_[i].position - elements_[i - 1].position;
                if ((d - step).norm() > 1e-9 || std::abs(d.norm() - spacing) > 1e-9)
                    throw Error(ErrorKind::invalid_geometry, "ULA elements must be collinear and uniformly spaced");
            }
        }
    }

    Vec3 ArrayLayout::centroid() const
    {
        Vec3 sum;
        for (const auto &e : elements_)
            sum = sum + e.position;
        return (1.0 / static_cast<double>(elements_.size())) * sum;
    }

    ArrayLayout build_ula(double spacing_m, Vec3 centroid, Vec3 polarization, Vec3 axis)
    {
        if (!(spacing_m > 0.0) || !std::isfinite(spacing_m))
            throw Error(ErrorKind::invalid_geometry, "ULA spacing must be positive");
        if (!finite(axis) || axis.norm() == 0.0)
            throw Error(ErrorKind::invalid_geometry, "ULA axis must be a non-zero vector");
        const Vec3 u = axis.normalized();
        std::vector<ElementPlacement> elements;
        for (int i = 0; i < 4; ++i)
            elements.push_back({centroid + ((i - 1.5) * spacing_m) * u, polarization});
        return ArrayLayout(ArrayKind::ula, std::move(elements));
    }

    ArrayLayout build_pi(double leg_m, double top_m, Vec3 centroid)
    {
        if (!(leg_m > 0.0) || !(top_m > 0.0) || !std::isfinite(leg_m) || !std::isfinite(top_m))
            throw Error(ErrorKind::invalid_geometry, "Π leg and top lengths must be positive");
        const double hx = top_m / 2.0;
        const double hy = leg_m / 2.0;
        return ArrayLayout(ArrayKind::pi_shape,
                           {
                               {centroid + Vec3{-hx, -hy, 0.0}, unit_y},
                               {centroid + Vec3{-hx, +hy, 0.0}, unit_x},
                               {centroid + Vec3{+hx, +hy, 0.0}, unit_x},
                               {centroid + Vec3{+hx, -hy, 0.0}, unit_y},
                           });
    }

    // ----- Room / Scenario --------------------------------------------------

    bool Room::contains(Vec3 p) const
    {
        return p.x >= 0.0 && p.x <= width_m && p.y >= 0.0 && p.y <= length_m && p.z >= 0.0 && p.z <= height_m;
    }

    std::optional<Wall> Room::wall_at(Vec3 p, double tolerance) const
    {
        const bool in_z = p.z >= -tolerance && p.z <= height_m + tolerance;
        const bool in_x = p.x >= -tolerance && p.x <= width_m + tolerance;
        const bool in_y = p.y >= -tolerance && p.y <= length_m + tolerance;
        if (!in_z)
            return std::nullopt;
        if (in_y && std::abs(p.x) <= tolerance) return Wall::west;
        if (in_y && std::abs(p.x - width_m) <= tolerance) return Wall::east;
        if (in_x && std::abs(p.y) <= tolerance) return Wall::south;
        if (in_x && std::abs(p.y - length_m) <= tolerance) return Wall::north;
        return std::nullopt;
    }

    Scenario::Scenario(const ScenarioParams &params) : p_(params)
    {
        const auto &r = p_.room;
        if (!(r.width_m > 0.0) || !(r.length_m > 0.0) || !(r.height_m > 0.0))
            throw Error(ErrorKind::invalid_geometry, "room dimensions must be positive");
        if (!(p_.frequency_hz > 0.0) || !std::isfinite(p_.frequency_hz))
            throw Error(ErrorKind::invalid_geometry, "carrier frequency must be positive");
        if (!finite(p_.tx_position) || !finite(p_.rx_centroid) || !finite(p_.tx_polarization))
            throw Error(ErrorKind::invalid_geometry, "scenario vectors must be finite");
        if (!r.contains(p_.tx_position) || !r.contains(p_.rx_centroid))
            throw Error(ErrorKind::invalid_geometry, "transmitter and receiver must be inside the room");
        if (std::abs(p_.tx_polarization.norm() - 1.0) > 1e-9)
            throw Error(ErrorKind::invalid_geometry, "transmit polarization must be a unit vector");
        if (std::abs((p_.tx_position - p_.rx_centroid).norm() - p_.tx_rx_distance_m) > 1e-6)
            throw Error(ErrorKind::invalid_geometry, "transmitter-receiver separation does not match tx_rx_distance_m");
        if (!(p_.polarization_leakage >= 0.0 && p_.polarization_leakage <= 1.0))
            throw Error(ErrorKind::invalid_geometry, "polarization leakage must lie in [0, 1]");
    }

    Scenario Scenario::along_room(const Room &room, double tx_x, double tx_y, double lateral_offset_m,
                                  double distance_m, double height_m, double frequency_hz, Vec3 tx_polarization,
                                  double polarization_leakage)
    {
        if (!(distance_m > 0.0) || std::abs(lateral_offset_m) >= distance_m)
            throw Error(ErrorKind::invalid_geometry, "lateral offset must be smaller than the link distance");
        const double along = std::sqrt(distance_m * distance_m - lateral_offset_m * lateral_offset_m);
        ScenarioParams p;
        p.room = room;
        p.tx_position = {tx_x, tx_y, height_m};
        p.rx_centroid = {tx_x + lateral_offset_m, tx_y + along, height_m};
        p.tx_polarization = tx_polarization;
        p.frequency_hz = frequency_hz;
        p.tx_rx_distance_m = distance_m;
        p.antenna_height_m = height_m;
        p.polarization_leakage = polarization_leakage;
        return Scenario(p);
    }

    // ----- Propagation ------------------------------------------------------

    double polarization_match(Vec3 tx_polarization, Vec3 rx_polarization, Vec3 direction)
    {
        const Vec3 k = direction.normalized();
        const Vec3 t = tx_polarization - tx_polarization.dot(k) * k;
        const Vec3 r = rx_polarization - rx_polarization.dot(k) * k;
        return std::min(1.0, std::abs(t.dot(r)));
    }

    double free_space_amplitude(double distance_m, double wavelength_m)
    {
        return wavelength_m / (4.0 * std::numbers::pi * distance_m);
    }

    double free_space_path_loss_db(double distance_m, double wavelength_m)
    {
        return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m / wavelength_m);
    }

    GainVector los_gains(const Scenario &scenario, const ArrayLayout &layout)
    {
        const double lambda = scenario.wavelength_m();
        const double leak = scenario.polarization_leakage();
        std::vector<cdouble> h;
        h.reserve(layout.size());
        for (std::size_t i = 0; i < layout.size(); ++i)
        {
            const auto &e = layout.elements()[i];
            const Vec3 v = e.position - scenario.tx_position();
            const double d = v.norm();
            if (d == 0.0)
                throw Error(ErrorKind::singular_geometry,
                            "element " + std::to_string(i + 1) + " coincides with the transmitter");
            const double m = std::max(polarization_match(scenario.tx_polarization(), e.polarization, v), leak);
            h.push_back(path_gain(d, lambda, m));
        }
        return GainVector(std::move(h));
    }

    GainVector replica_gains(const Scenario &scenario, const ArrayLayout &layout, const RayPath &ray)
    {
        if (ray.kind != RayKind::replica)
            throw Error(ErrorKind::invalid_ray, "replica_gains needs a replica ray");
        if (!ray.reflection_point)
            throw Error(ErrorKind::invalid_ray, "replica ray has no reflection point");
        if (!(ray.amplitude_scale >= 0.0) || !std::isfinite(ray.amplitude_scale))
            throw Error(ErrorKind::invalid_ray, "replica amplitude scale must be finite and non-negative");
        for (auto idx : ray.blocked_elements)
            if (idx < 1 || idx > layout.size())
                throw Error(ErrorKind::invalid_ray, "blocked element index " + std::to_string(idx) + " out of range");

        const auto wall = scenario.room().wall_at(*ray.reflection_point);
        if (!wall)
            throw Error(ErrorKind::invalid_ray, "reflection point does not lie on a room wall");

        const double lambda = scenario.wavelength_m();
        const double leak = scenario.polarization_leakage();
        const Vec3 image = mirror(scenario.room(), *wall, scenario.tx_position());
        const Vec3 image_polarization = mirror_direction(*wall, scenario.tx_polarization());

        std::vector<cdouble> h(layout.size(), cdouble{});
        if (ray.amplitude_scale == 0.0)
            return GainVector(std::move(h));
        for (std::size_t i = 0; i < layout.size(); ++i)
        {
            if (ray.blocked_elements.contains(i + 1))
                continue;
            const auto &e = layout.elements()[i];
            const Vec3 v = e.position - image;
            const double d = v.norm();
            if (d == 0.0)
                throw Error(ErrorKind::singular_geometry,
                            "element " + std::to_string(i + 1) + " coincides with the image source");
            const double m = std::max(polarization_match(image_polarization, e.polarization, v), leak);
            h[i] = ray.amplitude_scale * path_gain(d, lambda, m);
        }
        return GainVector(std::move(h));
    }

    RayPath specular_replica(const Scenario &scenario, Wall wall, double amplitude_scale,
                             std::set<std::size_t> blocked_elements)
    {
        const Vec3 image = mirror(scenario.room(), wall, scenario.tx_position());
        const Vec3 target = scenario.rx_centroid();
        const Vec3 n = wall_normal(wall);
        const double denom = (target - image).dot(n);
        if (denom == 0.0)
            throw Error(ErrorKind::invalid_ray, "receiver path runs parallel to the wall");
        const double t = (wall_offset(scenario.room(), wall) - image.dot(n)) / denom;
        if (!(t > 0.0 && t < 1.0))
            throw Error(ErrorKind::invalid_ray, "no specular reflection off that wall");
        Vec3 point = image + t * (target - image);
        // Snap onto the wall plane.
        if (n == unit_x)
            point.x = wall_offset(scenario.room(), wall);
        else
            point.y = wall_offset(scenario.room(), wall);

        RayPath ray;
        ray.kind = RayKind::replica;
        ray.reflection_point = point;
        ray.amplitude_scale = amplitude_scale;
        ray.blocked_elements = std::move(blocked_elements);
        return ray;
    }
}
