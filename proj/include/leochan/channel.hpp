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

#ifndef LEOCHAN_CHANNEL_HPP
#define LEOCHAN_CHANNEL_HPP

#include "leochan/distributions.hpp"

namespace leochan
{

// Delay-Doppler scattering function of the satellite channel, in 1/(s Hz).
struct ScatteringGrid
{
    GridAxis tau;
    GridAxis nu;
    Grid2D values;
    double availability = 0.0;
    std::size_t clamped = 0;

    // Riemann sum of the grid, i.e. the total received power gain.
    double integral() const;
};

struct PathLoss
{
    double rho2 = 0.0;
    double path_loss_db = 0.0;
};

struct ChannelSummary
{
    double path_loss_db = 0.0;
    double rho2 = 0.0;
    double rho2_grid = 0.0;
    double mean_delay_s = 0.0;
    double rms_delay_spread_s = 0.0;
    double mean_doppler_hz = 0.0; // zero by definition of the model
    double grid_mean_doppler_hz = 0.0; // computed first moment, for comparison
    double rms_doppler_spread_hz = 0.0;
    double channel_spread = 0.0;
    double availability = 0.0;
};

ScatteringGrid scattering_function(const CapModel &model, const JointGridSpec &spec,
                                   const PartitionOptions &options = {});

// Same grid with unit-mean Rayleigh power fading applied to every path.
ScatteringGrid scattering_function_rayleigh(const CapModel &model, const JointGridSpec &spec,
                                            const PartitionOptions &options = {});

// Average received power gain p_a E[G] and the corresponding path loss.
PathLoss path_loss_proposition(const CapModel &model);

// Moments of the scattering grid normalized by the proposition power gain. Throws
// ResolutionError when the grid cannot resolve the distribution: the grid power
// deviates by more than 2%, or a bin is too coarse for the spread it measures.
ChannelSummary global_params(const CapModel &model, const ScatteringGrid &grid);
ChannelSummary global_params(const CapModel &model, const JointGridSpec &spec, const PartitionOptions &options = {});

} // namespace leochan

#endif
