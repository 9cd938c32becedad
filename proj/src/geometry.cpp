// SPDX-License-Identifier: Apache-2.0
//
// remcr: cognitive radio interference under imperfect radio environment maps
// Copyright (C) 2026 The remcr authors
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

#include "remcr/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace remcr
{
    double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

    double norm(Point p) { return std::hypot(p.x, p.y); }

    Point sample_annulus_point(RandomStream &stream, double R0, double R)
    {
        if (!(R0 > 0.0) || !(R0 < R))
            throw std::invalid_argument("sample_annulus_point: requires 0 < R0 < R");
        // r^2 is uniform on [R0^2, R^2]
        const double r2 = R0 * R0 + stream.uniform() * (R * R - R0 * R0);
        const double r = std::sqrt(r2);
        const double phi = 2.0 * std::numbers::pi * stream.uniform();
        return {r * std::cos(phi), r * std::sin(phi)};
    }

    std::size_t cr_population(double cr_density, double R)
    {
        if (cr_density < 0.0)
            throw std::invalid_argument("cr_population: negative density");
        return static_cast<std::size_t>(std::llround(cr_density * std::numbers::pi * R * R / 1e6));
    }

    std::size_t sample_cr_count(RandomStream &stream, double cr_density, double R, double activity_p)
    {
        const std::size_t population = cr_population(cr_density, R);
        if (population == 0 || activity_p <= 0.0)
            return 0;
        if (activity_p >= 1.0)
            return population;
        return static_cast<std::size_t>(stream.binomial(population, activity_p));
    }

    Point snap_to_grid(Point p, double delta_grid)
    {
        if (delta_grid < 0.0)
            throw std::invalid_argument("snap_to_grid: negative grid size");
        if (delta_grid == 0.0)
            return p;
        auto centre = [delta_grid](double v)
        { return (std::floor(v / delta_grid) + 0.5) * delta_grid; };
        return {centre(p.x), centre(p.y)};
    }

    Point snap_to_grid(Point p, double delta_grid, Point offset)
    {
        const Point s = snap_to_grid({p.x - offset.x, p.y - offset.y}, delta_grid);
        if (delta_grid == 0.0)
            return p;
        return {s.x + offset.x, s.y + offset.y};
    }

    Placement sample_placement(RandomStream &stream, const ScenarioConfig &config)
    {
        Placement out;
        out.pu_rx = {0.0, 0.0};
        out.pu_tx = sample_annulus_point(stream, config.R0, config.R);
        const std::size_t n = sample_cr_count(stream, config.cr_density, config.R, config.activity_p);
        out.crs.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            out.crs.push_back(sample_annulus_point(stream, config.R0, config.R));
        snap_placement(out, config.delta_grid);
        return out;
    }

    void snap_placement(Placement &p, double delta_grid)
    {
        const Point offset{p.grid_phase.x * delta_grid, p.grid_phase.y * delta_grid};
        p.pu_rx_snapped = snap_to_grid(p.pu_rx, delta_grid, offset);
        p.pu_tx_snapped = snap_to_grid(p.pu_tx, delta_grid, offset);
        p.crs_snapped.resize(p.crs.size());
        for (std::size_t i = 0; i < p.crs.size(); ++i)
            p.crs_snapped[i] = snap_to_grid(p.crs[i], delta_grid, offset);
    }
}
