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

#ifndef LEOCHAN_NBPP_HPP
#define LEOCHAN_NBPP_HPP

#include "leochan/propagation.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace leochan
{

using Rng = std::mt19937_64;

// Uniform draw on [0, 1) with 53 bits, identical on every platform
// (std::uniform_real_distribution is implementation-defined).
inline double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// splitmix64 step, used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Density of the polar angle of a uniformly phased satellite on an inclined orbit.
double phi_pdf(const ShellConfig &shell, double phi);
double phi_cdf(const ShellConfig &shell, double phi);

// Polar angle at argument of latitude omega, and its inverse on [-pi/2, pi/2].
double phi_from_omega(const ShellConfig &shell, double omega);
double omega_from_phi(const ShellConfig &shell, double phi);

enum class MarkMode
{
    independent, // fair coin, independent of position
    physical,    // ascending iff the latitude is increasing
};

struct NbppModel
{
    ShellConfig shell;
    MarkMode mark_mode = MarkMode::independent;

    std::size_t n_points() const { return static_cast<std::size_t>(shell.n_sats); }

    SatellitePoint draw(Rng &rng) const;
    std::vector<SatellitePoint> sample(std::size_t count, Rng &rng) const;
};

} // namespace leochan

#endif
