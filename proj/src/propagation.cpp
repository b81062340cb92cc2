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

#include "leochan/propagation.hpp"

#include "leochan/errors.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace leochan
{

namespace
{

void check_sigma(double sigma)
{
    if (!(sigma >= -1e-12 && sigma <= pi + 1e-12))
        throw DomainError("central angle must lie in [0, pi]");
}

// Central angle from the squared slant range; the half-angle form keeps
// precision near the zenith, the cosine form near the antipode.
double sigma_from_range2(const ShellConfig &shell, double range2)
{
    const double r = shell.earth_radius_m;
    const double R = shell.shell_radius_m();
    const double h = R - r;
    const double lo = h * h;
    const double hi = (R + r) * (R + r);
    if (!(range2 >= lo * (1.0 - 1e-12) && range2 <= hi * (1.0 + 1e-12)))
        throw DomainError("range outside the shell's geometric limits");
    const double s2 = std::clamp((range2 - lo) / (4.0 * r * R), 0.0, 1.0);
    if (s2 < 0.5)
        return 2.0 * std::asin(std::sqrt(s2));
    return std::acos(clamp_unit((r * r + R * R - range2) / (2.0 * r * R)));
}

} // namespace

double gain(const ShellConfig &shell, double sigma)
{
    check_sigma(sigma);
    const double d = slant_range(shell, sigma);
    return 1.0 / (d * d);
}

double gain_inverse(const ShellConfig &shell, double g)
{
    if (!(g > 0.0))
        throw DomainError("gain must be positive");
    return sigma_from_range2(shell, 1.0 / g);
}

double delay(const ShellConfig &shell, double sigma)
{
    check_sigma(sigma);
    return slant_range(shell, sigma) / shell.light_speed_mps;
}

double delay_inverse(const ShellConfig &shell, double tau)
{
    if (!(tau > 0.0))
        throw DomainError("delay must be positive");
    const double d = shell.light_speed_mps * tau;
    return sigma_from_range2(shell, d * d);
}

double direction_angle(const ShellConfig &shell, double phi, Mark mark)
{
    const double bbar = shell.polar_inclination_rad();
    if (!(phi >= bbar - 1e-12 && phi <= pi - bbar + 1e-12))
        throw DomainError("polar angle outside the inclination band");
    const double ratio = std::cos(shell.inclination_rad) / std::sin(phi);
    return sign(mark) * std::acos(std::min(clamp_unit(ratio), 1.0));
}

LatitudeDoppler::LatitudeDoppler(const ShellConfig &shell, double user_polar_rad, double phi, Mark mark)
{
    const double beta = direction_angle(shell, phi, mark);
    const double r = shell.earth_radius_m;
    const double R = shell.shell_radius_m();
    const double sb = std::sin(beta), cb = std::cos(beta);
    const double su = std::sin(user_polar_rad), cu = std::cos(user_polar_rad);
    const double sp = std::sin(phi), cp = std::cos(phi);

    vr_ = shell.sat_speed_mps * r;
    cos_coef_ = -cb * su;
    sin_coef_ = sb * cp * su;
    const_coef_ = -sb * sp * cu;
    const double h = R - r;
    // |d|^2 = (R - r)^2 + 2 r R (1 - cos(sigma)), cos(sigma) = cu cp + su sp sin(theta)
    range2_const_ = h * h + 2.0 * r * R * (1.0 - cu * cp);
    range2_sin_ = 2.0 * r * R * su * sp;
    hz_per_mps_ = shell.carrier_hz / shell.light_speed_mps;
}

double LatitudeDoppler::normalized(double theta) const
{
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double d2 = range2_const_ - range2_sin_ * s;
    return vr_ * (cos_coef_ * c + sin_coef_ * s + const_coef_) / std::sqrt(d2);
}

double doppler_normalized(const ShellConfig &shell, double user_polar_rad, const SatellitePoint &sat)
{
    return LatitudeDoppler(shell, user_polar_rad, sat.phi_rad, sat.mark).normalized(sat.theta_rad);
}

double doppler_hz(const ShellConfig &shell, const UserGeometry &user, const SatellitePoint &sat)
{
    return LatitudeDoppler(shell, user.user_polar_rad, sat.phi_rad, sat.mark).hz(sat.theta_rad);
}

namespace
{

constexpr double infeasible = -1e300;

struct CapSearch
{
    const ShellConfig &shell;
    const UserGeometry &user;
    double cos_sigma1;
    double bbar;

    bool in_band(double phi) const { return phi >= bbar && phi <= pi - bbar; }

    double value(double theta, double phi, Mark mark) const
    {
        if (!in_band(phi) || cos_central_angle(user.user_polar_rad, theta, phi) < cos_sigma1 - 1e-15)
            return infeasible;
        return LatitudeDoppler(shell, user.user_polar_rad, phi, mark).hz(theta);
    }

    // Point at central angle sigma and azimuth alpha (clockwise from north) around the user.
    std::pair<double, double> on_circle(double sigma, double alpha) const
    {
        const double su = std::sin(user.user_polar_rad), cu = std::cos(user.user_polar_rad);
        const double cs = std::cos(sigma), ss = std::sin(sigma);
        // user u = (0, su, cu), north n = (0, -cu, su), east e = (-1, 0, 0)
        const double x = -ss * std::sin(alpha);
        const double y = cs * su - ss * std::cos(alpha) * cu;
        const double z = cs * cu + ss * std::cos(alpha) * su;
        return {std::atan2(y, x), std::acos(std::clamp(z, -1.0, 1.0))};
    }
};

double maximize_1d(const std::function<double(double)> &f, double lo, double hi)
{
    auto neg = [&](double x) { return -f(x); };
    const auto res = boost::math::tools::brent_find_minima(neg, lo, hi, 40);
    return -res.second;
}

} // namespace

double max_doppler(const ShellConfig &shell, const UserGeometry &user, const MaxDopplerOptions &options)
{
    const double s1 = user.sigma_max_rad;
    const double phi_u = user.user_polar_rad;
    CapSearch cap{shell, user, std::cos(s1), shell.polar_inclination_rad()};

    const double phi_lo = std::max(cap.bbar, phi_u - s1);
    const double phi_hi = std::min(pi - cap.bbar, phi_u + s1);
    double half_width = pi;
    if (s1 < phi_u && s1 < pi - phi_u)
        half_width = std::asin(std::min(1.0, std::sin(s1) / std::sin(phi_u)));
    const double th_lo = UserGeometry::user_azimuth_rad - half_width;
    const double th_hi = UserGeometry::user_azimuth_rad + half_width;

    double best = infeasible;
    for (Mark mark : {Mark::ascending, Mark::descending})
    {
        // Dense grid over the bounding box.
        const int n = std::max(options.grid_points, 3);
        const double dphi = (phi_hi - phi_lo) / (n - 1);
        const double dth = (th_hi - th_lo) / (n - 1);
        double grid_best = infeasible;
        double best_th = UserGeometry::user_azimuth_rad, best_ph = phi_u;
        for (int i = 0; i < n; ++i)
        {
            const double phi = phi_lo + i * dphi;
            const LatitudeDoppler line(shell, phi_u, phi, mark);
            for (int j = 0; j < n; ++j)
            {
                const double theta = th_lo + j * dth;
                if (cos_central_angle(phi_u, theta, phi) < cap.cos_sigma1)
                    continue;
                const double v = line.hz(theta);
                if (v > grid_best)
                {
                    grid_best = v;
                    best_th = theta;
                    best_ph = phi;
                }
            }
        }
        best = std::max(best, grid_best);

        // Coordinate-wise refinement around the best grid cell.
        double th = best_th, ph = best_ph;
        for (int round = 0; round < 4; ++round)
        {
            const double pv = ph;
            const double tv = th;
            auto along_theta = [&](double t) { return cap.value(t, pv, mark); };
            th = boost::math::tools::brent_find_minima([&](double t) { return -along_theta(t); }, tv - dth, tv + dth, 40).first;
            const double t2 = th;
            auto along_phi = [&](double p) { return cap.value(t2, p, mark); };
            ph = boost::math::tools::brent_find_minima([&](double p) { return -along_phi(p); }, std::max(phi_lo, pv - dphi),
                                                       std::min(phi_hi, pv + dphi), 40)
                     .first;
        }
        best = std::max(best, cap.value(th, ph, mark));

        // Cap boundary circle sigma = sigma_max.
        const int m = std::max(options.boundary_points, 8);
        const double dalpha = two_pi / m;
        double circle_best = infeasible;
        double circle_alpha = 0.0;
        auto on_boundary = [&](double alpha) {
            const auto [t, p] = cap.on_circle(s1, alpha);
            if (!cap.in_band(p))
                return infeasible;
            return LatitudeDoppler(shell, phi_u, p, mark).hz(t);
        };
        for (int k = 0; k < m; ++k)
        {
            const double v = on_boundary(k * dalpha);
            if (v > circle_best)
            {
                circle_best = v;
                circle_alpha = k * dalpha;
            }
        }
        if (circle_best > infeasible)
            best = std::max({best, circle_best, maximize_1d(on_boundary, circle_alpha - dalpha, circle_alpha + dalpha)});

        // Band edges that slice the cap.
        for (double edge : {cap.bbar, pi - cap.bbar})
        {
            if (edge < phi_u - s1 || edge > phi_u + s1)
                continue;
            const double c = (cap.cos_sigma1 - std::cos(phi_u) * std::cos(edge)) / (std::sin(phi_u) * std::sin(edge));
            if (c >= 1.0)
                continue;
            const double half = c <= -1.0 ? pi : half_pi - std::asin(c);
            const LatitudeDoppler line(shell, phi_u, edge, mark);
            double edge_best = infeasible;
            double edge_th = UserGeometry::user_azimuth_rad;
            const double step = 2.0 * half / m;
            for (int k = 0; k <= m; ++k)
            {
                const double t = UserGeometry::user_azimuth_rad - half + k * step;
                const double v = line.hz(t);
                if (v > edge_best)
                {
                    edge_best = v;
                    edge_th = t;
                }
            }
            const double lo = std::max(edge_th - step, UserGeometry::user_azimuth_rad - half);
            const double hi = std::min(edge_th + step, UserGeometry::user_azimuth_rad + half);
            best = std::max({best, edge_best, maximize_1d([&](double t) { return line.hz(t); }, lo, hi)});
        }
    }
    return best;
}

} // namespace leochan
