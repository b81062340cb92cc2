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

#include "leochan/channel.hpp"

#include "leochan/errors.hpp"
#include "leochan/propagation.hpp"
#include "leochan/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace leochan
{

double ScatteringGrid::integral() const
{
    double sum = 0.0;
    for (double v : values.values)
        sum += v;
    return sum * tau.step() * nu.step();
}

namespace
{

ScatteringGrid assemble(const CapModel &model, const JointGridSpec &spec, const PartitionOptions &options,
                        double power_scale)
{
    const JointGridSpec full =
        spec.nu_min_hz && spec.nu_max_hz && spec.tau_min_s && spec.tau_max_s
            ? spec
            : resolve(model, spec, max_doppler(model.shell(), model.user()));
    const JointPdf up = joint_pdf_grid(model, full, Mark::ascending, options);
    const JointPdf down = joint_pdf_grid(model, full, Mark::descending, options);

    ScatteringGrid out;
    out.tau = up.tau;
    out.nu = up.nu;
    out.availability = model.availability();
    out.clamped = up.clamped + down.clamped;
    out.values = Grid2D{up.pdf.rows, up.pdf.cols, std::vector<double>(up.pdf.values.size(), 0.0)};
    const double c = model.shell().light_speed_mps;
    for (std::size_t i = 0; i < out.values.rows; ++i)
    {
        const double t = out.tau.center(i);
        // 1/(c tau)^2 is the free-space gain at delay tau
        const double scale = power_scale * out.availability / (2.0 * c * c * t * t);
        for (std::size_t j = 0; j < out.values.cols; ++j)
            out.values.at(i, j) = scale * (up.pdf.at(i, j) + down.pdf.at(i, j));
    }
    return out;
}

} // namespace

ScatteringGrid scattering_function(const CapModel &model, const JointGridSpec &spec, const PartitionOptions &options)
{
    return assemble(model, spec, options, 1.0);
}

ScatteringGrid scattering_function_rayleigh(const CapModel &model, const JointGridSpec &spec,
                                            const PartitionOptions &options)
{
    // Mean power of the fading coefficient, E[Z] = integral of the Exp(1) survival function.
    boost::math::quadrature::exp_sinh<double> integrator;
    const double mean_power = integrator.integrate([](double z) { return std::exp(-z); }, 0.0,
                                                   std::numeric_limits<double>::infinity());
    return assemble(model, spec, options, mean_power);
}

PathLoss path_loss_proposition(const CapModel &model)
{
    const double gmin = model.gain_min(), gmax = model.gain_max();
    auto survival = [&](double g) { return model.p_cap(gain_inverse(model.shell(), std::clamp(g, gmin, gmax))); };
    // E[G] = integral of P(G > g) over [0, gmax]; below gmin the survival is 1.
    const double mean_gain = gmin + integrate_tanh_sinh(survival, gmin, gmax, 1e-10) / model.p_sat();
    PathLoss out;
    out.rho2 = model.availability() * mean_gain;
    out.path_loss_db = -10.0 * std::log10(out.rho2);
    return out;
}

ChannelSummary global_params(const CapModel &model, const ScatteringGrid &grid)
{
    const PathLoss pl = path_loss_proposition(model);
    ChannelSummary s;
    s.path_loss_db = pl.path_loss_db;
    s.rho2 = pl.rho2;
    s.rho2_grid = grid.integral();
    s.availability = grid.availability;

    const double gap = std::abs(s.rho2_grid / s.rho2 - 1.0);
    if (gap > 0.02)
    {
        std::ostringstream msg;
        msg << "scattering grid power differs from the path-loss integral by " << 100.0 * gap << "%";
        throw ResolutionError(msg.str());
    }

    const double cell = grid.tau.step() * grid.nu.step();
    double m1t = 0.0, m2t = 0.0, m1n = 0.0, m2n = 0.0;
    for (std::size_t i = 0; i < grid.values.rows; ++i)
    {
        const double t = grid.tau.center(i);
        for (std::size_t j = 0; j < grid.values.cols; ++j)
        {
            const double w = grid.values.at(i, j) * cell / s.rho2;
            const double v = grid.nu.center(j);
            m1t += w * t;
            m2t += w * t * t;
            m1n += w * v;
            m2n += w * v * v;
        }
    }
    s.mean_delay_s = m1t;
    s.rms_delay_spread_s = std::sqrt(std::max(0.0, m2t - m1t * m1t));
    s.mean_doppler_hz = 0.0;
    s.grid_mean_doppler_hz = m1n;
    s.rms_doppler_spread_hz = std::sqrt(std::max(0.0, m2n));
    s.channel_spread = 2.0 * s.rms_delay_spread_s * s.rms_doppler_spread_hz;

    // A bin of width w adds w^2/12 to the measured variance.
    auto check_bin = [](double step, double spread, const char *axis) {
        const double share = step * step / 12.0 / (spread * spread);
        if (share > 0.01)
        {
            std::ostringstream msg;
            msg << axis << " bin quantization is " << 100.0 * share << "% of the measured variance";
            throw ResolutionError(msg.str());
        }
    };
    check_bin(grid.tau.step(), s.rms_delay_spread_s, "delay");
    check_bin(grid.nu.step(), s.rms_doppler_spread_hz, "Doppler");
    return s;
}

ChannelSummary global_params(const CapModel &model, const JointGridSpec &spec, const PartitionOptions &options)
{
    return global_params(model, scattering_function(model, spec, options));
}

} // namespace leochan
