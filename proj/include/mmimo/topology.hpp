// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

#include "mmimo/types.hpp"

namespace mmimo {

using Point = std::array<double, 2>; // km

/// One drop of user positions with all large-scale link statistics.
/// Immutable after generation; safe to share across workers.
struct NetworkScenario {
    SystemConfig config;
    uint64_t seed = 0;
    std::vector<Point> bs_pos;                       // [L]
    std::vector<std::vector<Point>> user_pos;        // [L][K]
    std::vector<std::vector<std::vector<double>>> beta;  // [L][K][L], linear
    std::vector<std::vector<std::vector<double>>> theta; // [L][K][L], rad
};

/// Shortest distance on the square torus of the given side: minimum over the
/// 3x3 shifted copies of the plane.
double torus_distance(const Point& a, const Point& b, double side_km);

/// Eq.-of-model pathloss: -148.1 - 37.6 log10(d/1 km) + shadow realization,
/// in dB. Rejects nonpositive distances.
double pathloss_db(double d_km, double z_db);

/// BSs on a sqrt(L) x sqrt(L) grid of square cells at the cell centers;
/// users uniform in their serving cell, redrawn until the minimum serving
/// distance holds. Identical output for identical (config, seed).
NetworkScenario generate_scenario(const SystemConfig& config, uint64_t seed);

} // namespace mmimo
