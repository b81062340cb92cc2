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
#include "leochan/nbpp.hpp"
#include "leochan/quadrature.hpp"
#include "leochan/visibility.hpp"

#include <cmath>
#include <random>

using namespace leochan;
using Catch::Approx;

namespace
{

double brute_arc(double phi_u, double phi, double sigma, int n = 1000000)
{
    int inside = 0;
    for (int i = 0; i < n; ++i)
    {
        const double theta = two_pi * (i + 0.5) / n;
        inside += cos_central_angle(phi_u, theta, phi) >= std::cos(sigma);
    }
    return two_pi * inside / n;
}

double sigma_at(double c) { return std::acos(c); }

} // namespace

TEST_CASE("Arc length of a latitude line inside a cap", "[visibility]")
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 40; ++i)
    {
        const double phi_u = half_pi * u(rng);
        const double phi = pi * u(rng);
        const double sigma = 0.6 * u(rng);
        CHECK(arc_length(phi_u, phi, sigma) == Approx(brute_arc(phi_u, phi, sigma)).margin(2e-5));
        CHECK(arc_length(phi_u, phi, sigma) == Approx(arc_length(pi - phi_u, pi - phi, sigma)).margin(1e-12));
    }
    // full circle around the pole
    CHECK(arc_length(0.05, 0.02, 0.1) == Approx(two_pi));
    // out of reach
    CHECK(arc_length(half_pi, 0.5, 0.1) == 0.0);

    // derivative with respect to cos(sigma)
    for (double phi : {1.4, 1.5, 1.6})
    {
        const double c = std::cos(0.08), h = 1e-7;
        const double fd = (arc_length(1.5, phi, sigma_at(c + h)) - arc_length(1.5, phi, sigma_at(c - h))) / (2 * h);
        CHECK(arc_length_derivative(1.5, phi, 0.08) == Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("Cap probability", "[visibility]")
{
    const ShellConfig shell;

    SECTION("frozen values")
    {
        const CapModel eq(shell, UserGeometry::make(shell, half_pi, deg_to_rad(30.0)));
        CHECK(eq.p_sat() == Approx(0.00309677943078619).epsilon(1e-8));
        CHECK(eq.avg_visible() == Approx(9.8106).epsilon(1e-4));
        const CapModel mid(shell, UserGeometry::from_latitude(shell, deg_to_rad(53.0), deg_to_rad(30.0)));
        CHECK(mid.p_sat() == Approx(0.00808427).epsilon(1e-5));
        const CapModel high(shell, UserGeometry::make(shell, deg_to_rad(30.0), deg_to_rad(10.0)));
        CHECK(high.p_sat() == Approx(0.0163232195411312).epsilon(1e-8));
        CHECK(high.avg_visible() == Approx(51.712).epsilon(1e-4));
    }

    SECTION("Monte Carlo agreement")
    {
        for (double polar_deg : {90.0, 45.0, 30.0})
        {
            const auto user = UserGeometry::make(shell, deg_to_rad(polar_deg), deg_to_rad(20.0));
            const CapModel cap(shell, user);
            const NbppModel model{shell};
            Rng rng(1000 + static_cast<int>(polar_deg));
            const double sig = 0.7 * user.sigma_max_rad + 0.3 * user.sigma_min_rad;
            const double c_sig = std::cos(sig), c_max = std::cos(user.sigma_max_rad);
            const std::size_t n = 10000000;
            std::size_t in_sig = 0, in_max = 0;
            for (std::size_t i = 0; i < n; ++i)
            {
                const auto p = model.draw(rng);
                const double c = cos_central_angle(user.user_polar_rad, p.theta_rad, p.phi_rad);
                in_sig += c >= c_sig;
                in_max += c >= c_max;
            }
            for (auto [count, prob] : {std::pair{in_sig, cap.p_cap(sig)}, std::pair{in_max, cap.p_sat()}})
            {
                const double se = std::sqrt(prob * (1 - prob) / n);
                CHECK(std::abs(static_cast<double>(count) / n - prob) < 3.0 * se);
            }
        }
    }

    SECTION("derivative in cos(sigma)")
    {
        const auto user = UserGeometry::make(shell, deg_to_rad(40.0), deg_to_rad(25.0));
        const CapModel cap(shell, user);
        for (double t : {0.2, 0.5, 0.8})
        {
            const double sig = user.sigma_min_rad + t * (user.sigma_max_rad - user.sigma_min_rad);
            const double c = std::cos(sig), h = 1e-8;
            const double fd = (cap.p_cap(sigma_at(c - h)) - cap.p_cap(sigma_at(c + h))) / (2 * h);
            CHECK(std::abs(-cap.p_cap_prime(sig) - fd) < 1e-4 * std::abs(fd));
            CHECK(cap.p_cap_prime(sig) < 0.0);
        }
        // p_cap(s2) - p_cap(s1) equals the integral of -p_cap' over cos(sigma)
        const double s1 = user.sigma_min_rad + 0.1 * (user.sigma_max_rad - user.sigma_min_rad);
        const double s2 = user.sigma_max_rad;
        // split where the cap first touches the band edge
        const double kink = std::cos(user.user_polar_rad - shell.polar_inclination_rad());
        auto piece = [&](double lo, double hi) {
            return integrate_tanh_sinh([&](double c) { return -cap.p_cap_prime(sigma_at(c)); }, lo, hi, 1e-10);
        };
        const double integral = piece(std::cos(s2), kink) + piece(kink, std::cos(s1));
        CHECK(integral == Approx(cap.p_cap(s2) - cap.p_cap(s1)).epsilon(1e-6));
    }

    SECTION("monotone and bounded")
    {
        const auto user = UserGeometry::make(shell, half_pi, deg_to_rad(30.0));
        const CapModel cap(shell, user);
        CHECK(cap.p_cap(0.0) == 0.0);
        double prev = 0.0;
        for (int i = 1; i <= 50; ++i)
        {
            const double v = cap.p_cap(user.sigma_max_rad * i / 50.0);
            CHECK(v >= prev);
            prev = v;
        }
        CHECK(prev == Approx(cap.p_sat()).epsilon(1e-14));
    }
}

TEST_CASE("Visible-count distribution", "[visibility]")
{
    const ShellConfig shell;
    const CapModel cap(shell, UserGeometry::make(shell, half_pi, deg_to_rad(30.0)));
    double total = 0.0, mean = 0.0;
    for (int n = 0; n <= shell.n_sats; ++n)
    {
        const double p = cap.visible_count_pmf(n);
        total += p;
        mean += n * p;
    }
    CHECK(total == Approx(1.0).epsilon(1e-12));
    CHECK(mean == Approx(cap.avg_visible()).epsilon(1e-10));
    CHECK(cap.avg_visible() == Approx(shell.n_sats * cap.p_sat()).epsilon(1e-14));
    CHECK(cap.availability() == Approx(1.0 - cap.visible_count_pmf(0)).epsilon(1e-12));
    CHECK_THROWS_AS(cap.visible_count_pmf(-1), DomainError);
    CHECK_THROWS_AS(cap.visible_count_pmf(shell.n_sats + 1), DomainError);
}

TEST_CASE("Coverage versus latitude", "[visibility]")
{
    const ShellConfig shell;
    const double psi = deg_to_rad(30.0);
    auto avg = [&](double lat_deg) {
        return CapModel(shell, UserGeometry::from_latitude(shell, deg_to_rad(lat_deg), psi)).avg_visible();
    };
    CHECK(avg(0.0) < avg(30.0));
    CHECK(avg(30.0) < avg(45.0));
    CHECK(avg(45.0) < avg(52.0));
    CHECK(avg(57.0) < avg(52.0));
    // hemispheres agree
    CHECK(avg(-40.0) == Approx(avg(40.0)).epsilon(1e-14));

    const double limit = rad_to_deg(shell.inclination_rad + sigma_from_elevation(shell, psi));
    CHECK(avg(limit - 0.05) > 0.0);
    CHECK_THROWS_AS(UserGeometry::from_latitude(shell, deg_to_rad(limit + 0.05), psi), NoVisibleSatellites);
    CHECK_THROWS_AS(UserGeometry::from_latitude(shell, deg_to_rad(75.0), psi), NoVisibleSatellites);
}
