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

#include "leochan/nbpp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace leochan
{

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double phi_pdf(const ShellConfig &shell, double phi)
{
    const double bbar = shell.polar_inclination_rad();
    if (phi < bbar || phi > pi - bbar)
        return 0.0;
    const double sp = std::sin(phi);
    const double cb = std::cos(shell.inclination_rad);
    // sin^2(phi) - cos^2(b) = (sin(phi) - cos(b)) (sin(phi) + cos(b))
    const double gap = (sp - cb) * (sp + cb);
    if (gap <= 0.0)
        return std::numeric_limits<double>::infinity();
    return sp / (pi * std::sqrt(gap));
}

double phi_cdf(const ShellConfig &shell, double phi)
{
    const double bbar = shell.polar_inclination_rad();
    if (phi <= bbar)
        return 0.0;
    if (phi >= pi - bbar)
        return 1.0;
    const double x = std::clamp(std::cos(phi) / std::sin(shell.inclination_rad), -1.0, 1.0);
    return std::acos(x) / pi;
}

double phi_from_omega(const ShellConfig &shell, double omega)
{
    return half_pi - std::asin(std::sin(shell.inclination_rad) * std::sin(omega));
}

double omega_from_phi(const ShellConfig &shell, double phi)
{
    return std::asin(std::clamp(std::cos(phi) / std::sin(shell.inclination_rad), -1.0, 1.0));
}

SatellitePoint NbppModel::draw(Rng &rng) const
{
    const double omega = two_pi * uniform01(rng);
    const double theta = two_pi * uniform01(rng);
    SatellitePoint p;
    p.theta_rad = theta;
    p.phi_rad = phi_from_omega(shell, omega);
    if (mark_mode == MarkMode::physical)
        p.mark = std::cos(omega) > 0.0 ? Mark::ascending : Mark::descending;
    else
        p.mark = (rng() >> 63) ? Mark::ascending : Mark::descending;
    return p;
}

std::vector<SatellitePoint> NbppModel::sample(std::size_t count, Rng &rng) const
{
    std::vector<SatellitePoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(draw(rng));
    return out;
}

} // namespace leochan
