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

#include "leochan/geometry.hpp"

#include "leochan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace leochan
{

int ShellConfig::n_orbits() const
{
    return static_cast<int>(std::lround(two_pi / orbit_spacing_rad));
}

void ShellConfig::validate() const
{
    if (!(earth_radius_m > 0.0))
        throw ConfigError("earth radius must be positive");
    if (!(altitude_m > 0.0))
        throw ConfigError("altitude must be positive");
    if (!(sat_speed_mps > 0.0))
        throw ConfigError("satellite speed must be positive");
    if (!(carrier_hz > 0.0))
        throw ConfigError("carrier frequency must be positive");
    if (!(inclination_rad > 0.0 && inclination_rad < half_pi))
        throw ConfigError("inclination must lie in (0, 90) degrees");
    if (n_sats < 1)
        throw ConfigError("number of satellites must be at least 1");
    if (n_per_orbit < 1)
        throw ConfigError("satellites per orbit must be at least 1");
    if (!(orbit_spacing_rad > 0.0 && orbit_spacing_rad <= two_pi))
        throw ConfigError("orbital spacing must lie in (0, 360] degrees");
    if (!(light_speed_mps > 0.0))
        throw ConfigError("speed of light must be positive");
}

std::vector<std::string> ShellConfig::warnings() const
{
    std::vector<std::string> out;
    const int expected = n_orbits() * n_per_orbit;
    if (expected != n_sats)
    {
        std::ostringstream msg;
        msg << "n_sats = " << n_sats << " but (360 deg / orbit spacing) * n_per_orbit = " << expected;
        out.push_back(msg.str());
    }
    const double orbits = two_pi / orbit_spacing_rad;
    if (std::abs(orbits - std::round(orbits)) > 1e-6)
        out.emplace_back("orbital spacing does not divide 360 degrees");
    return out;
}

double clamp_unit(double x)
{
    constexpr double grace = 1e-12;
    if (std::isnan(x) || x > 1.0 + grace || x < -1.0 - grace)
    {
        std::ostringstream msg;
        msg << "trigonometric argument " << x << " outside [-1, 1]";
        throw DomainError(msg.str());
    }
    return std::clamp(x, -1.0, 1.0);
}

double central_angle(double user_polar_rad, double theta, double phi)
{
    return std::acos(clamp_unit(cos_central_angle(user_polar_rad, theta, phi)));
}

double slant_range(const ShellConfig &shell, double sigma)
{
    const double r = shell.earth_radius_m;
    const double R = shell.shell_radius_m();
    // r^2 + R^2 - 2 r R cos(s) written as (R - r)^2 + 4 r R sin^2(s/2) to keep
    // precision near the zenith.
    const double s = std::sin(0.5 * sigma);
    return std::sqrt((R - r) * (R - r) + 4.0 * r * R * s * s);
}

double sigma_from_elevation(const ShellConfig &shell, double psi)
{
    if (!(psi >= 0.0 && psi <= half_pi))
        throw DomainError("elevation must lie in [0, pi/2]");
    const double r = shell.earth_radius_m;
    const double R = shell.shell_radius_m();
    const double c = std::cos(psi);
    const double d = r * (std::sqrt((R / r) * (R / r) - c * c) - std::sin(psi));
    return std::acos(clamp_unit((r * r + R * R - d * d) / (2.0 * r * R)));
}

double elevation_from_sigma(const ShellConfig &shell, double sigma)
{
    const double horizon = std::acos(shell.earth_radius_m / shell.shell_radius_m());
    if (!(sigma >= 0.0 && sigma <= horizon + 1e-12))
        throw DomainError("central angle beyond the horizon has no elevation");
    // sigma_from_elevation is decreasing in psi.
    double lo = 0.0;
    double hi = half_pi;
    while (hi - lo > 1e-12)
    {
        const double mid = 0.5 * (lo + hi);
        if (sigma_from_elevation(shell, mid) > sigma)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

AngleBounds central_angle_bounds(const ShellConfig &shell, double user_polar_rad, double sigma1)
{
    if (!(user_polar_rad >= 0.0 && user_polar_rad <= half_pi))
        throw DomainError("user polar angle must lie in [0, pi/2]");
    const double bbar = shell.polar_inclination_rad();
    if (user_polar_rad >= bbar)
        return {0.0, sigma1};
    const double gap = bbar - user_polar_rad;
    if (gap <= sigma1)
        return {gap, sigma1};
    throw NoVisibleSatellites("visible cap does not reach the inclination band");
}

UserGeometry UserGeometry::make(const ShellConfig &shell, double user_polar_rad, double min_elevation_rad)
{
    if (!(user_polar_rad >= 0.0 && user_polar_rad <= pi))
        throw DomainError("user polar angle must lie in [0, pi]");
    if (!(min_elevation_rad >= 0.0 && min_elevation_rad < half_pi))
        throw DomainError("minimum elevation must lie in [0, pi/2)");

    UserGeometry u;
    u.user_polar_rad = user_polar_rad > half_pi ? pi - user_polar_rad : user_polar_rad;
    u.min_elevation_rad = min_elevation_rad;
    u.sigma1_rad = sigma_from_elevation(shell, min_elevation_rad);
    const AngleBounds bounds = central_angle_bounds(shell, u.user_polar_rad, u.sigma1_rad);
    u.sigma_min_rad = bounds.sigma_min;
    u.sigma_max_rad = bounds.sigma_max;
    return u;
}

UserGeometry UserGeometry::from_latitude(const ShellConfig &shell, double latitude_rad, double min_elevation_rad)
{
    return make(shell, half_pi - latitude_rad, min_elevation_rad);
}

} // namespace leochan
