// SPDX-License-Identifier: Apache-2.0
//
// leochan: stochastic channel models for LEO satellite mega-constellations
// Copyright (C) 2026 The leochan authors
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

#ifndef LEOCHAN_GEOMETRY_HPP
#define LEOCHAN_GEOMETRY_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace leochan
{

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double half_pi = 0.5 * std::numbers::pi;
inline constexpr double light_speed_mps = 299792458.0;

constexpr double deg_to_rad(double deg) { return deg * pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / pi; }

// Physical constants and orbital-shell parameters. Defaults describe a single
// Starlink-like shell: 3168 satellites at 550 km, 53 deg inclination.
struct ShellConfig
{
    double earth_radius_m = 6371000.0;
    double altitude_m = 550000.0;
    double sat_speed_mps = 7290.0;
    double carrier_hz = 12.7e9;
    double inclination_rad = deg_to_rad(53.0);
    int n_sats = 3168;
    int n_per_orbit = 22;
    double orbit_spacing_rad = deg_to_rad(2.5);
    double light_speed_mps = leochan::light_speed_mps;

    double shell_radius_m() const { return earth_radius_m + altitude_m; }

    // Polar angle of the northern edge of the inclination band.
    double polar_inclination_rad() const { return half_pi - inclination_rad; }

    int n_orbits() const;

    // Throws ConfigError when a hard invariant is broken.
    void validate() const;

    // Soft inconsistencies, e.g. N != (2 pi / s_orb) * N_orb.
    std::vector<std::string> warnings() const;
};

// Clamps an arccos/arcsin argument into [-1, 1]. Values further than 1e-12
// outside the interval raise DomainError.
double clamp_unit(double x);

// cos of the central angle between the user at (pi/2, phi_u) and a point at (theta, phi).
inline double cos_central_angle(double user_polar_rad, double theta, double phi)
{
    return std::cos(user_polar_rad) * std::cos(phi) + std::sin(user_polar_rad) * std::sin(phi) * std::sin(theta);
}

double central_angle(double user_polar_rad, double theta, double phi);

double slant_range(const ShellConfig &shell, double sigma);

// Central angle of a satellite seen at elevation psi.
double sigma_from_elevation(const ShellConfig &shell, double psi);

// Numerical inverse of sigma_from_elevation (bisection to 1e-12 rad).
double elevation_from_sigma(const ShellConfig &shell, double sigma);

struct AngleBounds
{
    double sigma_min;
    double sigma_max;
};

// Support of the user-satellite central angle once the cap is sliced by the
// inclination band. Throws NoVisibleSatellites when the cap misses the band.
AngleBounds central_angle_bounds(const ShellConfig &shell, double user_polar_rad, double sigma1);

// A ground user and its visibility cone. The user always sits at azimuth pi/2.
struct UserGeometry
{
    double user_polar_rad = half_pi;
    double min_elevation_rad = 0.0;
    double sigma1_rad = 0.0;
    double sigma_min_rad = 0.0;
    double sigma_max_rad = 0.0;

    static constexpr double user_azimuth_rad = half_pi;

    // Southern-hemisphere users (polar angle > pi/2) are reflected to pi - phi_u.
    static UserGeometry make(const ShellConfig &shell, double user_polar_rad, double min_elevation_rad);
    static UserGeometry from_latitude(const ShellConfig &shell, double latitude_rad, double min_elevation_rad);

    double latitude_rad() const { return half_pi - user_polar_rad; }
};

inline double central_angle(const UserGeometry &user, double theta, double phi)
{
    return central_angle(user.user_polar_rad, theta, phi);
}

} // namespace leochan

#endif
