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

#ifndef LEOCHAN_PROPAGATION_HPP
#define LEOCHAN_PROPAGATION_HPP

#include "leochan/geometry.hpp"

namespace leochan
{

// Ascending satellites move north (latitude increasing), descending ones south.
enum class Mark : int
{
    descending = -1,
    ascending = +1,
};

constexpr int sign(Mark m) { return static_cast<int>(m); }
constexpr Mark opposite(Mark m) { return m == Mark::ascending ? Mark::descending : Mark::ascending; }

struct SatellitePoint
{
    double theta_rad = 0.0; // rotational (azimuthal) angle
    double phi_rad = half_pi; // polar angle
    Mark mark = Mark::ascending;
};

// Free-space channel gain 1/|d|^2 at central angle sigma, in 1/m^2.
double gain(const ShellConfig &shell, double sigma);
double gain_inverse(const ShellConfig &shell, double g);

// One-way propagation delay |d|/c in seconds.
double delay(const ShellConfig &shell, double sigma);
double delay_inverse(const ShellConfig &shell, double tau);

// Heading of a satellite relative to the local east direction, signed by the mark.
double direction_angle(const ShellConfig &shell, double phi, Mark mark);

// Projection of the satellite velocity on the user-to-satellite line of sight, in m/s.
// Positive values mean the range is increasing.
double doppler_normalized(const ShellConfig &shell, double user_polar_rad, const SatellitePoint &sat);

// Doppler shift (f_c / c) * doppler_normalized, in Hz.
double doppler_hz(const ShellConfig &shell, const UserGeometry &user, const SatellitePoint &sat);

// Doppler along one latitude line. Everything that depends only on (phi, mark)
// is folded into four coefficients so each evaluation costs one sincos and one sqrt.
class LatitudeDoppler
{
public:
    LatitudeDoppler(const ShellConfig &shell, double user_polar_rad, double phi, Mark mark);

    double normalized(double theta) const;
    double hz(double theta) const { return hz_per_mps_ * normalized(theta); }
    double hz_per_mps() const { return hz_per_mps_; }

private:
    double vr_;
    double cos_coef_;
    double sin_coef_;
    double const_coef_;
    double range2_const_;
    double range2_sin_;
    double hz_per_mps_;
};

struct MaxDopplerOptions
{
    int grid_points = 1001;
    int boundary_points = 4096;
};

// Largest Doppler shift (Hz) over both marks and the whole visible cap.
double max_doppler(const ShellConfig &shell, const UserGeometry &user, const MaxDopplerOptions &options = {});

} // namespace leochan

#endif
