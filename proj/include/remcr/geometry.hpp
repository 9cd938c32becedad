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

#pragma once

#include "remcr/random.hpp"
#include "remcr/scenario.hpp"

#include <cstddef>
#include <vector>

namespace remcr
{
    struct Point
    {
        double x = 0.0;
        double y = 0.0;

        friend bool operator==(const Point &, const Point &) = default;
    };

    double distance(Point a, Point b);
    double norm(Point p);

    // Uniform over the area of the annulus R0 <= |p| <= R centred on the origin.
    Point sample_annulus_point(RandomStream &stream, double R0, double R);

    // Fixed CR population for a disc of radius R [m] at the given density [1/km^2].
    std::size_t cr_population(double cr_density, double R);

    // Number of CRs seeking a connection: Binomial(cr_population, activity_p).
    std::size_t sample_cr_count(RandomStream &stream, double cr_density, double R, double activity_p);

    // Centre of the delta x delta cell containing p; cells are anchored at the
    // origin. delta == 0 returns p unchanged.
    Point snap_to_grid(Point p, double delta_grid);

    // Same with the cell lattice shifted by offset (in metres): cell corners sit
    // at offset + k * delta_grid.
    Point snap_to_grid(Point p, double delta_grid, Point offset);

    // True positions of one trial together with their REM grid counterparts.
    struct Placement
    {
        Point pu_rx;
        Point pu_tx;
        std::vector<Point> crs;
        Point pu_rx_snapped;
        Point pu_tx_snapped;
        std::vector<Point> crs_snapped;
        // Grid registration as a fraction of one cell in [0, 1)^2; zero places
        // a cell corner on the PU receiver.
        Point grid_phase;
    };

    // Draws the PU transmitter and the active CRs, then snaps everything
    // (including the PU receiver at the origin) to the config's grid.
    Placement sample_placement(RandomStream &stream, const ScenarioConfig &config);

    // Re-snaps an existing placement to another grid size, keeping its grid phase.
    void snap_placement(Placement &placement, double delta_grid);
}
