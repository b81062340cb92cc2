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

#ifndef LEOCHAN_DISTRIBUTIONS_HPP
#define LEOCHAN_DISTRIBUTIONS_HPP

#include "leochan/latitude_scan.hpp"
#include "leochan/visibility.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace leochan
{

// Gain and delay of a satellite drawn uniformly among the visible ones.
double gain_cdf(const CapModel &model, double g);
double gain_pdf(const CapModel &model, double g);
double delay_cdf(const CapModel &model, double tau_s);
double delay_pdf(const CapModel &model, double tau_s);

struct DopplerCdfOptions
{
    int scan_points = 512;
    double rel_tol = 1e-10;
};

// Doppler CDF of a visible satellite conditioned on its mark.
double doppler_cdf(const CapModel &model, double nu_hz, Mark mark, const DopplerCdfOptions &options = {});
// Equal-weight mixture over both marks.
double doppler_cdf_mixed(const CapModel &model, double nu_hz, const DopplerCdfOptions &options = {});

// P(V <= nu, T <= tau | mark), normalized by the full-cap p_sat.
double joint_cdf(const CapModel &model, double nu_hz, double tau_s, Mark mark, const DopplerCdfOptions &options = {});

// Uniform axis spanning [lo, hi] exactly; the effective step never exceeds the requested one.
struct GridAxis
{
    double lo = 0.0;
    double hi = 1.0;
    std::size_t cells = 1;
    double requested_step = 1.0;

    static GridAxis span(double lo, double hi, double step);

    double step() const { return (hi - lo) / static_cast<double>(cells); }
    double edge(std::size_t i) const;
    double center(std::size_t i) const { return lo + (static_cast<double>(i) + 0.5) * step(); }
    std::vector<double> edges() const;
};

struct DopplerGridSpec
{
    double nu_step_hz = 2.65e3;
    std::optional<double> nu_min_hz; // default -nu_max
    std::optional<double> nu_max_hz; // default +nu_max
};

struct JointGridSpec
{
    double nu_step_hz = 2.61e3;
    double tau_step_s = 2.8e-5;
    std::optional<double> nu_min_hz;
    std::optional<double> nu_max_hz;
    std::optional<double> tau_min_s; // default: delay support of the model
    std::optional<double> tau_max_s;
};

struct DopplerPdf
{
    GridAxis nu;
    std::vector<double> cdf; // at the cells() + 1 edges
    std::vector<double> pdf; // per cell, 1/Hz
    std::size_t clamped = 0;
};

// Row-major matrix over (delay row, Doppler column).
struct Grid2D
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    double &at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

struct JointPdf
{
    GridAxis tau;
    GridAxis nu;
    Grid2D cdf; // (tau cells + 1) x (nu cells + 1), at the edges
    Grid2D pdf; // per cell, 1/(s Hz)
    std::size_t clamped = 0;
};

DopplerGridSpec resolve(const CapModel &model, const DopplerGridSpec &spec, double nu_max_hz);
JointGridSpec resolve(const CapModel &model, const JointGridSpec &spec, double nu_max_hz);

// Doppler CDF for one mark at many sorted points, from a single partition pass.
std::vector<double> doppler_cdf_curve(const CapModel &model, const std::vector<double> &nu_hz, Mark mark,
                                      const PartitionOptions &options = {});

// Mixed-mark Doppler density on a uniform grid, from the exact CDF at the grid edges.
DopplerPdf doppler_pdf_grid(const CapModel &model, const DopplerGridSpec &spec, const PartitionOptions &options = {});

// Joint delay-Doppler density for one mark on a uniform grid.
JointPdf joint_pdf_grid(const CapModel &model, const JointGridSpec &spec, Mark mark,
                        const PartitionOptions &options = {});

// CDF of Z * G with Z ~ Exp(1) (unit-mean Rayleigh power) independent of the visible gain G.
double rayleigh_gain_cdf(const CapModel &model, double y);

} // namespace leochan

#endif
