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

#ifndef LEOCHAN_ORBIT_SIM_HPP
#define LEOCHAN_ORBIT_SIM_HPP

#include "leochan/nbpp.hpp"
#include "leochan/propagation.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace leochan
{

using Vec3 = std::array<double, 3>;

// Walker-delta layout of circular orbits. Satellite index = orbit * n_per_orbit + slot.
class WalkerConstellation
{
public:
    static WalkerConstellation build(const ShellConfig &shell, double inter_orbit_phase_rad = 0.0);

    const ShellConfig &shell() const { return shell_; }
    std::size_t size() const { return initial_argument_.size(); }
    std::size_t n_orbits() const { return ascending_node_.size(); }
    double inter_orbit_phase() const { return inter_orbit_phase_; }
    double ascending_node(std::size_t orbit) const { return ascending_node_[orbit]; }
    double initial_argument(std::size_t index) const { return initial_argument_[index]; }

    double angular_rate() const { return shell_.sat_speed_mps / shell_.shell_radius_m(); }
    double period_s() const { return two_pi / angular_rate(); }

    double argument_of_latitude(std::size_t index, double t) const;
    Vec3 position(std::size_t index, double t) const; // metres, Earth-centred
    SatellitePoint point(std::size_t index, double t) const;
    std::vector<SatellitePoint> propagate(double t) const;

private:
    ShellConfig shell_;
    double inter_orbit_phase_ = 0.0;
    std::vector<double> ascending_node_;
    std::vector<double> initial_argument_;
};

struct SnapshotObservation
{
    double time_s = 0.0;
    std::size_t visible_count = 0;
    bool observed = false; // false when nothing was visible
    double gain = 0.0;
    double delay_s = 0.0;
    double doppler_hz = 0.0;
    Mark mark = Mark::ascending;
};

// Evenly spaced snapshot times after a random epoch within one orbital period.
std::vector<double> snapshot_times(const WalkerConstellation &constellation, std::size_t count, double step_s, Rng &rng);

// At each time, picks one visible satellite uniformly at random and records its channel.
std::vector<SnapshotObservation> snapshot_sample(const WalkerConstellation &constellation, const UserGeometry &user,
                                                 const std::vector<double> &times, Rng &rng);

// Doppler from the central difference of the slant range, (f_c / c) d|d|/dt.
double finite_difference_doppler_hz(const WalkerConstellation &constellation, const UserGeometry &user,
                                    std::size_t index, double t, double dt = 1e-3);

// Kolmogorov-Smirnov distance between the samples and a continuous CDF.
double ks_distance(std::vector<double> samples, const std::function<double(double)> &cdf);

} // namespace leochan

#endif
