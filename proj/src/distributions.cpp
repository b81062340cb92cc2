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

#include "leochan/distributions.hpp"

#include "leochan/errors.hpp"
#include "leochan/nbpp.hpp"
#include "leochan/propagation.hpp"
#include "leochan/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace leochan
{

double gain_cdf(const CapModel &model, double g)
{
    if (g <= model.gain_min())
        return 0.0;
    if (g >= model.gain_max())
        return 1.0;
    const double sigma = gain_inverse(model.shell(), g);
    return std::clamp(1.0 - model.p_cap(sigma) / model.p_sat(), 0.0, 1.0);
}

double gain_pdf(const CapModel &model, double g)
{
    if (g <= model.gain_min() || g >= model.gain_max())
        return 0.0;
    const double r = model.shell().earth_radius_m;
    const double R = model.shell().shell_radius_m();
    const double sigma = gain_inverse(model.shell(), g);
    return std::max(0.0, -model.p_cap_prime(sigma) / (model.p_sat() * 2.0 * g * g * r * R));
}

double delay_cdf(const CapModel &model, double tau)
{
    if (tau >= model.delay_max_s())
        return 1.0;
    if (tau < model.delay_min_s())
        return 0.0;
    const double sigma = delay_inverse(model.shell(), tau);
    return std::clamp(model.p_cap(sigma) / model.p_sat(), 0.0, 1.0);
}

double delay_pdf(const CapModel &model, double tau)
{
    if (tau <= model.delay_min_s() || tau >= model.delay_max_s())
        return 0.0;
    const ShellConfig &sh = model.shell();
    const double r = sh.earth_radius_m;
    const double R = sh.shell_radius_m();
    const double c = sh.light_speed_mps;
    const double sigma = delay_inverse(sh, tau);
    return std::max(0.0, -(c * c * tau / (r * R)) * model.p_cap_prime(sigma) / model.p_sat());
}

namespace
{

double doppler_cdf_in_cap(const CapModel &model, double nu, Mark mark, double sigma_cap,
                          const DopplerCdfOptions &options)
{
    if (sigma_cap <= 0.0)
        return 0.0;
    const ShellConfig &shell = model.shell();
    const UserGeometry &user = model.user();
    // 0: no arc or level below the arc's range, 1: level inside it, 2: level above it
    auto state = [&](double omega, double *measure) {
        const double phi = phi_from_omega(shell, omega);
        double lo = 0.0, hi = 0.0;
        if (!cap_arc(user, phi, sigma_cap, lo, hi))
        {
            *measure = 0.0;
            return 0;
        }
        const LatitudeDoppler line(shell, user.user_polar_rad, phi, mark);
        const LatitudeScan scan(line, lo, hi, options.scan_points);
        if (nu >= scan.max_hz())
        {
            *measure = hi - lo;
            return 2;
        }
        if (nu < scan.min_hz())
        {
            *measure = 0.0;
            return 0;
        }
        *measure = scan.measure_below(nu);
        return 1;
    };
    auto inner = [&](double omega) {
        double m = 0.0;
        state(omega, &m);
        return m;
    };

    // The integrand has square-root kinks where the level touches the extremes of
    // a latitude line; split the panels there.
    const auto panels = model.omega_breakpoints({sigma_cap});
    std::vector<double> edges{panels.front()};
    constexpr int probes = 64;
    for (std::size_t i = 0; i + 1 < panels.size(); ++i)
    {
        const double a = panels[i], b = panels[i + 1];
        double scratch = 0.0;
        double x_prev = a;
        int s_prev = state(a + 1e-12 * (b - a), &scratch);
        for (int k = 1; k <= probes; ++k)
        {
            const double x = k == probes ? b - 1e-12 * (b - a) : a + (b - a) * k / probes;
            const int s_now = state(x, &scratch);
            if (s_now != s_prev)
            {
                double l = x_prev, r = x;
                for (int it = 0; it < 60 && r - l > 1e-15; ++it)
                {
                    const double mid = 0.5 * (l + r);
                    (state(mid, &scratch) == s_prev ? l : r) = mid;
                }
                edges.push_back(0.5 * (l + r));
            }
            x_prev = x;
            s_prev = s_now;
        }
        edges.push_back(b);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        sum += integrate_adaptive(inner, edges[i], edges[i + 1], options.rel_tol, 12);
    return std::clamp(sum / (2.0 * pi * pi * model.p_sat()), 0.0, 1.0);
}

} // namespace

double doppler_cdf(const CapModel &model, double nu, Mark mark, const DopplerCdfOptions &options)
{
    return doppler_cdf_in_cap(model, nu, mark, model.sigma_max(), options);
}

double doppler_cdf_mixed(const CapModel &model, double nu, const DopplerCdfOptions &options)
{
    return 0.5 * doppler_cdf(model, nu, Mark::ascending, options) + 0.5 * doppler_cdf(model, nu, Mark::descending, options);
}

double joint_cdf(const CapModel &model, double nu, double tau, Mark mark, const DopplerCdfOptions &options)
{
    if (tau <= model.delay_min_s())
        return doppler_cdf_in_cap(model, nu, mark, model.sigma_min(), options);
    if (tau >= model.delay_max_s())
        return doppler_cdf(model, nu, mark, options);
    return doppler_cdf_in_cap(model, nu, mark, delay_inverse(model.shell(), tau), options);
}

GridAxis GridAxis::span(double lo, double hi, double step)
{
    if (!(step > 0.0) || !std::isfinite(step))
        throw DomainError("grid step must be positive");
    if (!(hi > lo))
        throw DomainError("grid range must be nonempty");
    GridAxis ax;
    ax.lo = lo;
    ax.hi = hi;
    ax.requested_step = step;
    const double n = std::ceil((hi - lo) / step * (1.0 - 1e-12));
    if (n > 1e7)
        throw DomainError("grid too fine");
    ax.cells = static_cast<std::size_t>(std::max(1.0, n));
    return ax;
}

double GridAxis::edge(std::size_t i) const
{
    if (i == 0)
        return lo;
    if (i >= cells)
        return hi;
    return lo + static_cast<double>(i) * step();
}

std::vector<double> GridAxis::edges() const
{
    std::vector<double> out(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i)
        out[i] = edge(i);
    return out;
}

DopplerGridSpec resolve(const CapModel &, const DopplerGridSpec &spec, double nu_max)
{
    DopplerGridSpec out = spec;
    if (!out.nu_min_hz)
        out.nu_min_hz = -nu_max;
    if (!out.nu_max_hz)
        out.nu_max_hz = nu_max;
    return out;
}

JointGridSpec resolve(const CapModel &model, const JointGridSpec &spec, double nu_max)
{
    JointGridSpec out = spec;
    if (!out.nu_min_hz)
        out.nu_min_hz = -nu_max;
    if (!out.nu_max_hz)
        out.nu_max_hz = nu_max;
    if (!out.tau_min_s)
        out.tau_min_s = model.delay_min_s();
    if (!out.tau_max_s)
        out.tau_max_s = model.delay_max_s();
    return out;
}

namespace
{

std::vector<double> row_sigma_edges(const CapModel &model, const GridAxis &tau)
{
    std::vector<double> out(tau.cells + 1);
    for (std::size_t i = 0; i <= tau.cells; ++i)
    {
        const double t = tau.edge(i);
        if (t <= model.delay_min_s())
            out[i] = model.sigma_min();
        else if (t >= model.delay_max_s())
            out[i] = model.sigma_max();
        else
            out[i] = delay_inverse(model.shell(), t);
    }
    return out;
}

// Partition edges for the Doppler axis: the interior grid edges, plus wide outer
// bounds so that nothing falls outside (mass beyond the axis folds into the end cells).
std::vector<double> column_nu_edges(const GridAxis &nu)
{
    auto e = nu.edges();
    e.front() = -1e300;
    e.back() = 1e300;
    return e;
}

} // namespace

std::vector<double> doppler_cdf_curve(const CapModel &model, const std::vector<double> &nu_hz, Mark mark,
                                      const PartitionOptions &options)
{
    if (!std::is_sorted(nu_hz.begin(), nu_hz.end()))
        throw DomainError("Doppler points must be sorted");
    std::vector<double> edges;
    edges.reserve(nu_hz.size() + 2);
    edges.push_back(-1e300);
    edges.insert(edges.end(), nu_hz.begin(), nu_hz.end());
    edges.push_back(1e300);
    const auto mass = partition_masses(model, mark, {model.sigma_min(), model.sigma_max()}, edges, options);
    std::vector<double> out(nu_hz.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i)
    {
        acc += mass[i];
        out[i] = std::clamp(acc, 0.0, 1.0);
    }
    return out;
}

DopplerPdf doppler_pdf_grid(const CapModel &model, const DopplerGridSpec &spec, const PartitionOptions &options)
{
    if (!spec.nu_min_hz || !spec.nu_max_hz)
        return doppler_pdf_grid(model, resolve(model, spec, max_doppler(model.shell(), model.user())), options);

    DopplerPdf out;
    out.nu = GridAxis::span(*spec.nu_min_hz, *spec.nu_max_hz, spec.nu_step_hz);
    const std::vector<double> sigmas{model.sigma_min(), model.sigma_max()};
    const auto nu_edges = column_nu_edges(out.nu);
    const auto plus = partition_masses(model, Mark::ascending, sigmas, nu_edges, options);
    const auto minus = partition_masses(model, Mark::descending, sigmas, nu_edges, options);

    const std::size_t n = out.nu.cells;
    out.pdf.resize(n);
    out.cdf.assign(n + 1, 0.0);
    const double step = out.nu.step();
    for (std::size_t j = 0; j < n; ++j)
    {
        const double m = 0.5 * (plus[j] + minus[j]);
        out.cdf[j + 1] = out.cdf[j] + m;
        double d = m / step;
        if (d < 0.0 && d > -1e-9)
        {
            d = 0.0;
            ++out.clamped;
        }
        out.pdf[j] = d;
    }
    return out;
}

JointPdf joint_pdf_grid(const CapModel &model, const JointGridSpec &spec, Mark mark, const PartitionOptions &options)
{
    if (!spec.nu_min_hz || !spec.nu_max_hz || !spec.tau_min_s || !spec.tau_max_s)
        return joint_pdf_grid(model, resolve(model, spec, max_doppler(model.shell(), model.user())), mark, options);

    JointPdf out;
    out.tau = GridAxis::span(*spec.tau_min_s, *spec.tau_max_s, spec.tau_step_s);
    out.nu = GridAxis::span(*spec.nu_min_hz, *spec.nu_max_hz, spec.nu_step_hz);
    const std::size_t rows = out.tau.cells, cols = out.nu.cells;
    const auto mass = partition_masses(model, mark, row_sigma_edges(model, out.tau), column_nu_edges(out.nu), options);

    out.pdf = Grid2D{rows, cols, std::vector<double>(rows * cols, 0.0)};
    out.cdf = Grid2D{rows + 1, cols + 1, std::vector<double>((rows + 1) * (cols + 1), 0.0)};
    const double area = out.tau.step() * out.nu.step();
    double peak = 0.0;
    for (double m : mass)
        peak = std::max(peak, m / area);
    for (std::size_t i = 0; i < rows; ++i)
    {
        for (std::size_t j = 0; j < cols; ++j)
        {
            const double m = mass[i * cols + j];
            out.cdf.at(i + 1, j + 1) = out.cdf.at(i, j + 1) + out.cdf.at(i + 1, j) - out.cdf.at(i, j) + m;
            double d = m / area;
            if (d < 0.0 && d > -1e-6 * peak)
            {
                d = 0.0;
                ++out.clamped;
            }
            out.pdf.at(i, j) = d;
        }
    }
    return out;
}

double rayleigh_gain_cdf(const CapModel &model, double y)
{
    if (!(y > 0.0))
        return 0.0;
    if (!std::isfinite(y))
        return 1.0;
    const double gmin = model.gain_min(), gmax = model.gain_max();
    const double z_lo = y / gmax, z_hi = y / gmin;
    const double head = std::exp(-z_lo);
    if (head == 0.0)
        return 1.0;
    auto integrand = [&](double z) {
        const double g = std::clamp(y / z, gmin, gmax);
        return std::exp(-z) * model.p_cap(gain_inverse(model.shell(), g));
    };
    const double tail = integrate_tanh_sinh(integrand, z_lo, z_hi, 1e-9) / model.p_sat();
    // 1 - exp(-y/gmin) - tail, written to avoid cancellation for small y
    return std::clamp(-std::expm1(-z_hi) - tail, 0.0, 1.0);
}

} // namespace leochan
