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

#include "leochan/orbit_sim.hpp"

#include "leochan/errors.hpp"
#include "leochan/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace leochan
{

WalkerConstellation WalkerConstellation::build(const ShellConfig &shell, double inter_orbit_phase_rad)
{
    shell.validate();
    const double orbits = two_pi / shell.orbit_spacing_rad;
    const long n_orb = std::lround(orbits);
    if (std::abs(orbits - static_cast<double>(n_orb)) > 1e-9 || n_orb * shell.n_per_orbit != shell.n_sats)
    {
        std::ostringstream msg;
        msg << "constellation needs n_sats = (360 deg / orbit spacing) * n_per_orbit, got " << shell.n_sats << " vs "
            << orbits << " * " << shell.n_per_orbit;
        throw ConfigError(msg.str());
    }
    WalkerConstellation c;
    c.shell_ = shell;
    c.inter_orbit_phase_ = inter_orbit_phase_rad;
    const double slot = two_pi / shell.n_per_orbit;
    c.ascending_node_.resize(static_cast<std::size_t>(n_orb));
    c.initial_argument_.resize(static_cast<std::size_t>(shell.n_sats));
    for (long k = 0; k < n_orb; ++k)
    {
        c.ascending_node_[k] = k * shell.orbit_spacing_rad;
        for (int j = 0; j < shell.n_per_orbit; ++j)
            c.initial_argument_[k * shell.n_per_orbit + j] = j * slot + k * inter_orbit_phase_rad;
    }
    return c;
}

double WalkerConstellation::argument_of_latitude(std::size_t index, double t) const
{
    return std::fmod(initial_argument_[index] + angular_rate() * t, two_pi);
}

Vec3 WalkerConstellation::position(std::size_t index, double t) const
{
    const double node = ascending_node_[index / shell_.n_per_orbit];
    const double w = argument_of_latitude(index, t);
    const double R = shell_.shell_radius_m();
    const double cn = std::cos(node), sn = std::sin(node);
    const double cw = std::cos(w), sw = std::sin(w);
    const double ci = std::cos(shell_.inclination_rad), si = std::sin(shell_.inclination_rad);
    return {R * (cn * cw - sn * sw * ci), R * (sn * cw + cn * sw * ci), R * sw * si};
}

SatellitePoint WalkerConstellation::point(std::size_t index, double t) const
{
    const Vec3 p = position(index, t);
    const double R = shell_.shell_radius_m();
    SatellitePoint s;
    s.theta_rad = std::atan2(p[1], p[0]);
    if (s.theta_rad < 0.0)
        s.theta_rad += two_pi;
    s.phi_rad = std::acos(std::clamp(p[2] / R, -1.0, 1.0));
    s.mark = std::cos(argument_of_latitude(index, t)) > 0.0 ? Mark::ascending : Mark::descending;
    return s;
}

std::vector<SatellitePoint> WalkerConstellation::propagate(double t) const
{
    std::vector<SatellitePoint> out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out[i] = point(i, t);
    return out;
}

std::vector<double> snapshot_times(const WalkerConstellation &constellation, std::size_t count, double step_s, Rng &rng)
{
    const double epoch = constellation.period_s() * uniform01(rng);
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = epoch + static_cast<double>(i) * step_s;
    return out;
}

std::vector<SnapshotObservation> snapshot_sample(const WalkerConstellation &constellation, const UserGeometry &user,
                                                 const std::vector<double> &times, Rng &rng)
{
    const ShellConfig &shell = constellation.shell();
    const std::uint64_t base_seed = rng();
    const double su = std::sin(user.user_polar_rad), cu = std::cos(user.user_polar_rad);
    const double cos_s1 = std::cos(user.sigma_max_rad);
    const double R = shell.shell_radius_m();

    std::vector<SnapshotObservation> out(times.size());
    parallel_for(times.size(), [&](std::size_t k) {
        const double t = times[k];
        thread_local std::vector<std::size_t> visible;
        visible.clear();
        for (std::size_t i = 0; i < constellation.size(); ++i)
        {
            const Vec3 p = constellation.position(i, t);
            // user unit vector is (0, sin phi_u, cos phi_u)
            if ((su * p[1] + cu * p[2]) / R >= cos_s1)
                visible.push_back(i);
        }
        SnapshotObservation &obs = out[k];
        obs.time_s = t;
        obs.visible_count = visible.size();
        if (visible.empty())
            return;
        Rng local(mix_seed(base_seed, k));
        const std::size_t pick = visible[static_cast<std::size_t>(uniform01(local) * visible.size())];
        const SatellitePoint sat = constellation.point(pick, t);
        const double cs = std::clamp(cos_central_angle(user.user_polar_rad, sat.theta_rad, sat.phi_rad), -1.0, 1.0);
        const double sigma = std::min(std::acos(cs), user.sigma_max_rad);
        obs.observed = true;
        obs.gain = gain(shell, sigma);
        obs.delay_s = delay(shell, sigma);
        obs.doppler_hz = doppler_hz(shell, user, sat);
        obs.mark = sat.mark;
    });
    return out;
}

double finite_difference_doppler_hz(const WalkerConstellation &constellation, const UserGeometry &user,
                                    std::size_t index, double t, double dt)
{
    const double r = constellation.shell().earth_radius_m;
    const Vec3 u{0.0, r * std::sin(user.user_polar_rad), r * std::cos(user.user_polar_rad)};
    auto range = [&](double when) {
        const Vec3 p = constellation.position(index, when);
        return std::hypot(p[0] - u[0], p[1] - u[1], p[2] - u[2]);
    };
    const double rate = (range(t + dt) - range(t - dt)) / (2.0 * dt);
    return constellation.shell().carrier_hz / constellation.shell().light_speed_mps * rate;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)> &cdf)
{
    if (samples.empty())
        throw DomainError("KS distance needs at least one sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        const double f = cdf(samples[i]);
        d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    return d;
}

} // namespace leochan
