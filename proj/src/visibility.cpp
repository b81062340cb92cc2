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

#include "leochan/visibility.hpp"

#include "leochan/errors.hpp"
#include "leochan/nbpp.hpp"
#include "leochan/propagation.hpp"
#include "leochan/quadrature.hpp"

#include <boost/math/distributions/binomial.hpp>

#include <algorithm>
#include <cmath>

namespace leochan
{

namespace
{

// With D = sin(phi_u) sin(phi) and s = (cos(sigma) - cos(phi_u) cos(phi)) / D:
//   1 - s = 2 A B / D,  1 + s = 2 C E / D
// using the half-angle sines below. They stay accurate near tangency.
struct HalfAngles
{
    double a, b, c, e;
    HalfAngles(double phi_u, double phi, double sigma)
        : a(std::sin(0.5 * (sigma + phi - phi_u))), b(std::sin(0.5 * (sigma - phi + phi_u))),
          c(std::sin(0.5 * (sigma + phi + phi_u))), e(std::sin(0.5 * (phi + phi_u - sigma)))
    {
    }
};

} // namespace

double arc_length(double phi_u, double phi, double sigma)
{
    const HalfAngles h(phi_u, phi, sigma);
    const double outside = h.a * h.b;
    if (outside <= 0.0)
        return 0.0;
    const double inside = h.c * h.e;
    if (inside <= 0.0)
        return two_pi;
    const double ds = std::cos(sigma) - std::cos(phi_u) * std::cos(phi);
    return 2.0 * std::atan2(2.0 * std::sqrt(outside * inside), ds);
}

double arc_length(const UserGeometry &user, double phi, double sigma) { return arc_length(user.user_polar_rad, phi, sigma); }

double arc_length_derivative(double phi_u, double phi, double sigma)
{
    const HalfAngles h(phi_u, phi, sigma);
    const double prod = h.a * h.b * h.c * h.e;
    if (!(prod > 0.0) || h.a * h.b <= 0.0)
        return 0.0;
    return -1.0 / std::sqrt(prod);
}

CapModel::CapModel(const ShellConfig &shell, const UserGeometry &user, double quadrature_tol)
    : shell_(shell), user_(user), tol_(quadrature_tol)
{
    shell_.validate();
    if (!(tol_ > 0.0))
        throw DomainError("quadrature tolerance must be positive");
    g_min_ = gain(shell_, user_.sigma_max_rad);
    g_max_ = gain(shell_, user_.sigma_min_rad);
    tau_min_ = delay(shell_, user_.sigma_min_rad);
    tau_max_ = delay(shell_, user_.sigma_max_rad);
    p_sat_ = p_cap(user_.sigma_max_rad);
    availability_ = -std::expm1(shell_.n_sats * std::log1p(-p_sat_));
}

double CapModel::arc_length_at_omega(double omega, double sigma) const
{
    return arc_length(user_.user_polar_rad, phi_from_omega(shell_, omega), sigma);
}

std::vector<double> CapModel::omega_breakpoints(const std::vector<double> &sigmas) const
{
    const double phi_u = user_.user_polar_rad;
    const double bbar = shell_.polar_inclination_rad();
    std::vector<double> out{-half_pi, half_pi};
    auto add = [&](double phi) {
        if (phi > bbar && phi < pi - bbar)
            out.push_back(omega_from_phi(shell_, phi));
    };
    for (double s : sigmas)
    {
        add(phi_u + s);
        add(phi_u - s);
        add(s - phi_u);
        add(two_pi - s - phi_u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](double x, double y) { return std::abs(x - y) < 1e-15; }), out.end());
    return out;
}

double CapModel::p_cap(double sigma) const
{
    if (sigma <= 0.0)
        return 0.0;
    if (sigma > pi)
        sigma = pi;
    const auto edges = omega_breakpoints({sigma});
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    {
        const double lo = edges[i], hi = edges[i + 1];
        const double mid_len = arc_length_at_omega(0.5 * (lo + hi), sigma);
        if (mid_len == 0.0)
            continue;
        if (mid_len == two_pi)
        {
            sum += two_pi * (hi - lo);
            continue;
        }
        sum += integrate_tanh_sinh([&](double w) { return arc_length_at_omega(w, sigma); }, lo, hi, tol_);
    }
    // dphi f(phi) = domega / pi and each latitude line contributes L / (2 pi).
    return std::clamp(sum / (2.0 * pi * pi), 0.0, 1.0);
}

double CapModel::p_cap_prime(double sigma) const
{
    if (sigma <= 0.0 || sigma >= pi)
        return 0.0;
    const double phi_u = user_.user_polar_rad;
    const auto edges = omega_breakpoints({sigma});
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    {
        const double lo = edges[i], hi = edges[i + 1];
        const double mid = arc_length_derivative(phi_u, phi_from_omega(shell_, 0.5 * (lo + hi)), sigma);
        if (mid == 0.0)
            continue;
        sum += integrate_tanh_sinh(
            [&](double w) { return arc_length_derivative(phi_u, phi_from_omega(shell_, w), sigma); }, lo, hi, tol_);
    }
    return sum / (2.0 * pi * pi);
}

double CapModel::avg_visible() const { return shell_.n_sats * p_sat_; }

double CapModel::visible_count_pmf(int n) const
{
    const int total = shell_.n_sats;
    if (n < 0 || n > total)
        throw DomainError("visible count outside [0, N]");
    const boost::math::binomial_distribution<double> dist(total, p_sat_);
    return boost::math::pdf(dist, n);
}

} // namespace leochan
