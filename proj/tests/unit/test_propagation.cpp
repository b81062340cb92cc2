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

#include "catch_amalgamated.hpp"

#include "leochan/errors.hpp"
#include "leochan/propagation.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <random>

using namespace leochan;
using Catch::Approx;

namespace
{

double bisect(const std::function<double(double)> &f, double target, double lo, double hi, bool decreasing)
{
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        const bool above = decreasing ? f(mid) > target : f(mid) < target;
        (above ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Doppler as the projection of the satellite velocity on the unit line of sight,
// built from Cartesian position and heading vectors.
double cartesian_doppler_mps(const ShellConfig &shell, double phi_u, double theta, double phi, int mark)
{
    const double r = shell.earth_radius_m, R = shell.shell_radius_m();
    const std::array<double, 3> u{0.0, r * std::sin(phi_u), r * std::cos(phi_u)};
    const std::array<double, 3> s{R * std::sin(phi) * std::cos(theta), R * std::sin(phi) * std::sin(theta), R * std::cos(phi)};
    const std::array<double, 3> east{-std::sin(theta), std::cos(theta), 0.0};
    const std::array<double, 3> north{-std::cos(phi) * std::cos(theta), -std::cos(phi) * std::sin(theta), std::sin(phi)};
    const double beta = mark * std::acos(std::cos(shell.inclination_rad) / std::sin(phi));
    double dot = 0.0, norm = 0.0;
    for (int k = 0; k < 3; ++k)
    {
        const double v = shell.sat_speed_mps * (std::cos(beta) * east[k] + std::sin(beta) * north[k]);
        const double d = s[k] - u[k];
        dot += v * d;
        norm += d * d;
    }
    return dot / std::sqrt(norm);
}

} // namespace

TEST_CASE("Channel gain and inverse", "[propagation]")
{
    const ShellConfig shell;
    const double h = shell.altitude_m;
    CHECK(gain(shell, 0.0) == Approx(1.0 / (h * h)).epsilon(1e-15));
    CHECK(gain(shell, 0.0) == Approx(3.3058e-12).epsilon(1e-4));
    const double s1 = sigma_from_elevation(shell, deg_to_rad(30.0));
    const double dmax = slant_range(shell, s1);
    CHECK(gain(shell, s1) == Approx(1.0 / (dmax * dmax)).epsilon(1e-14));

    CHECK(gain_inverse(shell, 1.0 / (h * h)) == Approx(0.0).margin(1e-7));
    CHECK(gain_inverse(shell, gain(shell, s1)) == Approx(s1).epsilon(1e-12));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pick(gain(shell, s1), gain(shell, 0.0));
    for (int i = 0; i < 20; ++i)
    {
        const double g = pick(rng);
        CHECK(gain(shell, gain_inverse(shell, g)) == Approx(g).epsilon(1e-12));
        const double oracle = bisect([&](double s) { return gain(shell, s); }, g, 0.0, s1 * 1.01, true);
        CHECK(gain_inverse(shell, g) == Approx(oracle).margin(1e-10));
    }

    // strictly decreasing
    double prev = gain(shell, 0.0);
    for (int i = 1; i <= 100; ++i)
    {
        const double g = gain(shell, s1 * i / 100.0);
        CHECK(g < prev);
        prev = g;
    }

    CHECK_THROWS_AS(gain(shell, -0.1), DomainError);
    CHECK_THROWS_AS(gain_inverse(shell, 1.0), DomainError);
    CHECK_THROWS_AS(gain_inverse(shell, -1.0), DomainError);
}

TEST_CASE("Propagation delay and inverse", "[propagation]")
{
    const ShellConfig shell;
    const double c = shell.light_speed_mps;
    CHECK(delay(shell, 0.0) == Approx(1.8346e-3).epsilon(1e-4));
    const double s1 = sigma_from_elevation(shell, deg_to_rad(30.0));
    CHECK(delay(shell, s1) == Approx(3.31e-3).epsilon(2e-3));
    CHECK(delay(shell, s1) == Approx(3.33e-3).epsilon(0.01));
    CHECK(delay_inverse(shell, shell.altitude_m / c) == Approx(0.0).margin(1e-7));
    CHECK(delay_inverse(shell, delay(shell, s1)) == Approx(s1).epsilon(1e-12));

    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> pick(delay(shell, 0.0), delay(shell, s1));
    for (int i = 0; i < 20; ++i)
    {
        const double t = pick(rng);
        CHECK(std::abs(delay(shell, delay_inverse(shell, t)) - t) <= 1e-15);
        const double oracle = bisect([&](double s) { return delay(shell, s); }, t, 0.0, s1 * 1.01, false);
        CHECK(delay_inverse(shell, t) == Approx(oracle).margin(1e-10));
        // free-space gain at the delay equals 1/(c tau)^2
        CHECK(gain(shell, delay_inverse(shell, t)) == Approx(1.0 / (c * c * t * t)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(delay(shell, 4.0), DomainError);
    CHECK_THROWS_AS(delay_inverse(shell, 1.0), DomainError);
}

TEST_CASE("Direction angle", "[propagation]")
{
    const ShellConfig shell;
    const double b = shell.inclination_rad;
    CHECK(direction_angle(shell, half_pi, Mark::ascending) == Approx(b).epsilon(1e-14));
    CHECK(direction_angle(shell, shell.polar_inclination_rad(), Mark::ascending) == Approx(0.0).margin(1e-6));
    CHECK(direction_angle(shell, shell.polar_inclination_rad(), Mark::descending) == Approx(0.0).margin(1e-6));
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> pick(shell.polar_inclination_rad(), pi - shell.polar_inclination_rad());
    for (int i = 0; i < 10; ++i)
    {
        const double phi = pick(rng);
        CHECK(direction_angle(shell, phi, Mark::descending) == -direction_angle(shell, phi, Mark::ascending));
    }
    CHECK_THROWS_AS(direction_angle(shell, 0.3, Mark::ascending), DomainError);
}

TEST_CASE("Doppler shift", "[propagation]")
{
    const ShellConfig shell;
    const auto equator = UserGeometry::make(shell, half_pi, deg_to_rad(30.0));

    SECTION("overhead satellite")
    {
        for (Mark a : {Mark::ascending, Mark::descending})
            CHECK(doppler_hz(shell, equator, {half_pi, half_pi, a}) == Approx(0.0).margin(1e-6));
    }

    SECTION("Cartesian line-of-sight projection")
    {
        std::mt19937_64 rng(14);
        std::uniform_real_distribution<double> th(0.0, two_pi), ph(shell.polar_inclination_rad() + 1e-3,
                                                                   pi - shell.polar_inclination_rad() - 1e-3);
        std::uniform_real_distribution<double> pu(0.0, half_pi);
        for (int i = 0; i < 200; ++i)
        {
            const double phi_u = pu(rng), theta = th(rng), phi = ph(rng);
            for (Mark a : {Mark::ascending, Mark::descending})
            {
                const double ours = doppler_normalized(shell, phi_u, {theta, phi, a});
                const double oracle = cartesian_doppler_mps(shell, phi_u, theta, phi, sign(a));
                CHECK(ours == Approx(oracle).epsilon(1e-9).margin(1e-9));
                CHECK(std::abs(ours) <= shell.sat_speed_mps);
            }
        }
    }

    SECTION("mirror antisymmetry at the equator")
    {
        const double bbar = shell.polar_inclination_rad();
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j)
            {
                const double x = -0.15 + 0.3 * i / 9.0;
                const double phi = bbar + 0.01 + (pi - 2 * bbar - 0.02) * j / 9.0;
                for (Mark a : {Mark::ascending, Mark::descending})
                {
                    const double lhs = doppler_hz(shell, equator, {half_pi + x, phi, a});
                    const double rhs = doppler_hz(shell, equator, {half_pi - x, pi - phi, a});
                    CHECK(lhs == Approx(-rhs).margin(1e-6));
                }
            }
    }

    SECTION("latitude-line evaluator matches the point form")
    {
        const LatitudeDoppler line(shell, 1.0, 1.3, Mark::descending);
        for (double t : {0.5, 1.0, 1.57, 2.0})
            CHECK(line.hz(t) == Approx(doppler_hz(shell, UserGeometry::make(shell, 1.0, 0.5), {t, 1.3, Mark::descending}))
                                    .epsilon(1e-14));
    }
}

TEST_CASE("Maximum Doppler", "[propagation]")
{
    const ShellConfig shell;
    const double hz_per_mps = shell.carrier_hz / shell.light_speed_mps;

    const auto equator = UserGeometry::make(shell, half_pi, deg_to_rad(30.0));
    const double eq = max_doppler(shell, equator);
    CHECK(eq == Approx(246.2e3).epsilon(0.01));
    const double bound = hz_per_mps * shell.sat_speed_mps * shell.earth_radius_m / shell.altitude_m;
    CHECK(eq <= bound);

    const auto high = UserGeometry::make(shell, deg_to_rad(30.0), deg_to_rad(10.0));
    CHECK(max_doppler(shell, high) == Approx(246.8e3).epsilon(0.01));

    // no point in the cap exceeds the reported maximum
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double seen = 0.0;
    for (int i = 0; i < 200000; ++i)
    {
        const double theta = half_pi + equator.sigma_max_rad * u(rng);
        const double phi = half_pi + equator.sigma_max_rad * u(rng);
        if (central_angle(half_pi, theta, phi) > equator.sigma_max_rad)
            continue;
        seen = std::max(seen, doppler_hz(shell, equator, {theta, phi, i % 2 ? Mark::ascending : Mark::descending}));
    }
    CHECK(seen <= eq + 1.0);
    CHECK(seen >= eq - 500.0);
}
