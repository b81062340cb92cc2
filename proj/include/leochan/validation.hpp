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

#ifndef LEOCHAN_VALIDATION_HPP
#define LEOCHAN_VALIDATION_HPP

#include "leochan/channel.hpp"
#include "leochan/nbpp.hpp"
#include "leochan/orbit_sim.hpp"

#include <string>
#include <vector>

namespace leochan
{

// Draws NBPP satellites conditioned on lying in the visible cap. Longitude and the
// argument of latitude are independent, so rejection from their bounding box is exact.
class VisibleSampler
{
public:
    explicit VisibleSampler(const CapModel &model);
    SatellitePoint draw(Rng &rng) const;

private:
    const CapModel *model_;
    double theta_lo_, theta_hi_;
    double omega_lo_, omega_hi_;
    double cos_sigma_;
};

// Piecewise-linear CDF through tabulated points; 0 left of the table, 1 right of it.
class TabulatedCdf
{
public:
    TabulatedCdf(std::vector<double> x, std::vector<double> f);
    double operator()(double v) const;

private:
    std::vector<double> x_, f_;
};

TabulatedCdf tabulate_gain_cdf(const CapModel &model, std::size_t points = 2001);
TabulatedCdf tabulate_delay_cdf(const CapModel &model, std::size_t points = 2001);
TabulatedCdf tabulate_doppler_cdf(const CapModel &model, double nu_max_hz, double step_hz = 250.0);

struct CheckResult
{
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool passed = false;
    std::string detail;
};

struct ValidationSettings
{
    std::size_t mc_samples = 1000000;
    std::size_t snapshots = 50000;
    double snapshot_step_s = 1.0;
    double inter_orbit_phase_rad = 0.0;
    std::uint64_t seed = 1;
    JointGridSpec grid;
};

struct ValidationReport
{
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

ValidationReport run_validation(const ShellConfig &shell, const UserGeometry &user, const ValidationSettings &settings);

} // namespace leochan

#endif
