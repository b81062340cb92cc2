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

#include "leochan/validation.hpp"

#include "leochan/errors.hpp"
#include "leochan/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace leochan
{

VisibleSampler::VisibleSampler(const CapModel &model) : model_(&model)
{
    const ShellConfig &shell = model.shell();
    const double phi_u = model.user().user_polar_rad;
    const double s = model.sigma_max();
    cos_sigma_ = std::cos(s);

    double half = pi;
    if (s < phi_u && s < pi - phi_u)
        half = std::asin(std::min(1.0, std::sin(s) / std::sin(phi_u)));
    theta_lo_ = UserGeometry::user_azimuth_rad - half;
    theta_hi_ = UserGeometry::user_azimuth_rad + half;

    const double bbar = shell.polar_inclination_rad();
    const double phi_lo = std::max(bbar, phi_u - s);
    const double phi_hi = std::min(pi - bbar, phi_u + s);
    omega_lo_ = omega_from_phi(shell, phi_hi);
    omega_hi_ = omega_from_phi(shell, phi_lo);
}

SatellitePoint VisibleSampler::draw(Rng &rng) const
{
    const ShellConfig &shell = model_->shell();
    const double phi_u = model_->user().user_polar_rad;
    for (;;)
    {
        const double theta = theta_lo_ + (theta_hi_ - theta_lo_) * uniform01(rng);
        const double omega = omega_lo_ + (omega_hi_ - omega_lo_) * uniform01(rng);
        const Mark mark = (rng() >> 63) ? Mark::ascending : Mark::descending;
        const double phi = phi_from_omega(shell, omega);
        if (cos_central_angle(phi_u, theta, phi) >= cos_sigma_)
            return {theta, phi, mark};
    }
}

TabulatedCdf::TabulatedCdf(std::vector<double> x, std::vector<double> f) : x_(std::move(x)), f_(std::move(f))
{
    if (x_.size() < 2 || x_.size() != f_.size())
        throw DomainError("tabulated CDF needs at least two matching points");
}

double TabulatedCdf::operator()(double v) const
{
    if (v <= x_.front())
        return v < x_.front() ? 0.0 : f_.front();
    if (v >= x_.back())
        return 1.0;
    const auto it = std::upper_bound(x_.begin(), x_.end(), v);
    const std::size_t i = static_cast<std::size_t>(it - x_.begin());
    const double t = (v - x_[i - 1]) / (x_[i] - x_[i - 1]);
    return f_[i - 1] + t * (f_[i] - f_[i - 1]);
}

TabulatedCdf tabulate_gain_cdf(const CapModel &model, std::size_t points)
{
    std::vector<double> x(points), f(points);
    parallel_for(points, [&](std::size_t i) {
        x[i] = model.gain_min() + (model.gain_max() - model.gain_min()) * static_cast<double>(i) / (points - 1);
        f[i] = gain_cdf(model, x[i]);
    });
    return {x, f};
}

TabulatedCdf tabulate_delay_cdf(const CapModel &model, std::size_t points)
{
    std::vector<double> x(points), f(points);
    parallel_for(points, [&](std::size_t i) {
        x[i] = model.delay_min_s() + (model.delay_max_s() - model.delay_min_s()) * static_cast<double>(i) / (points - 1);
        f[i] = delay_cdf(model, x[i]);
    });
    return {x, f};
}

TabulatedCdf tabulate_doppler_cdf(const CapModel &model, double nu_max_hz, double step_hz)
{
    DopplerGridSpec spec;
    spec.nu_step_hz = step_hz;
    spec.nu_min_hz = -nu_max_hz;
    spec.nu_max_hz = nu_max_hz;
    const DopplerPdf grid = doppler_pdf_grid(model, spec);
    return {grid.nu.edges(), grid.cdf};
}

bool ValidationReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

namespace
{

CheckResult below(std::string name, double value, double threshold, std::string detail = {})
{
    return {std::move(name), value, threshold, value < threshold, std::move(detail)};
}

} // namespace

ValidationReport run_validation(const ShellConfig &shell, const UserGeometry &user, const ValidationSettings &settings)
{
    ValidationReport report;
    const CapModel model(shell, user);
    const double nu_max = max_doppler(shell, user);
    Rng rng(settings.seed);
    const TabulatedCdf gcdf = tabulate_gain_cdf(model);
    const TabulatedCdf tcdf = tabulate_delay_cdf(model);
    const TabulatedCdf vcdf = tabulate_doppler_cdf(model, nu_max);

    // Monte Carlo oracle: NBPP satellites conditioned on visibility.
    {
        const VisibleSampler sampler(model);
        std::vector<double> gs(settings.mc_samples), ts(settings.mc_samples), vs(settings.mc_samples);
        for (std::size_t i = 0; i < settings.mc_samples; ++i)
        {
            const SatellitePoint p = sampler.draw(rng);
            const double sigma = std::acos(clamp_unit(cos_central_angle(user.user_polar_rad, p.theta_rad, p.phi_rad)));
            gs[i] = gain(shell, sigma);
            ts[i] = delay(shell, sigma);
            vs[i] = doppler_hz(shell, user, p);
        }
        if (settings.mc_samples > 0)
        {
            report.checks.push_back(below("monte_carlo_ks_gain", ks_distance(gs, gcdf), 0.005));
            report.checks.push_back(below("monte_carlo_ks_delay", ks_distance(ts, tcdf), 0.005));
            report.checks.push_back(below("monte_carlo_ks_doppler", ks_distance(vs, vcdf), 0.005));
        }
    }

    // Derivative consistency.
    {
        double worst = 0.0;
        const double lo = model.sigma_min(), hi = model.sigma_max();
        for (int k = 1; k <= 20; ++k)
        {
            const double s = lo + (hi - lo) * k / 21.0;
            const double h = 1e-5;
            const double c = std::cos(s);
            const double fd = (model.p_cap(std::acos(c + h)) - model.p_cap(std::acos(c - h))) / (2.0 * h);
            worst = std::max(worst, std::abs(fd / model.p_cap_prime(s) - 1.0));
        }
        report.checks.push_back(below("p_cap_prime_vs_difference", worst, 1e-4));

        double worst_g = 0.0, worst_t = 0.0;
        for (int k = 1; k <= 20; ++k)
        {
            const double g = model.gain_min() + (model.gain_max() - model.gain_min()) * k / 21.0;
            const double hg = 1e-6 * (model.gain_max() - model.gain_min());
            const double fdg = (gain_cdf(model, g + hg) - gain_cdf(model, g - hg)) / (2.0 * hg);
            worst_g = std::max(worst_g, std::abs(fdg / gain_pdf(model, g) - 1.0));
            const double t = model.delay_min_s() + (model.delay_max_s() - model.delay_min_s()) * k / 21.0;
            const double ht = 1e-6 * (model.delay_max_s() - model.delay_min_s());
            const double fdt = (delay_cdf(model, t + ht) - delay_cdf(model, t - ht)) / (2.0 * ht);
            worst_t = std::max(worst_t, std::abs(fdt / delay_pdf(model, t) - 1.0));
        }
        report.checks.push_back(below("gain_pdf_vs_difference", worst_g, 1e-3));
        report.checks.push_back(below("delay_pdf_vs_difference", worst_t, 1e-3));
    }

    // Dual path loss and resolution of the scattering grid.
    {
        const JointGridSpec spec = resolve(model, settings.grid, nu_max);
        const ScatteringGrid grid = scattering_function(model, spec);
        const PathLoss pl = path_loss_proposition(model);
        report.checks.push_back(below("dual_path_loss_gap", std::abs(grid.integral() / pl.rho2 - 1.0), 0.01));
        CheckResult res{"scattering_resolution", 0.0, 0.0, true, {}};
        try
        {
            const ChannelSummary s = global_params(model, grid);
            res.value = s.channel_spread;
        }
        catch (const ResolutionError &e)
        {
            res.passed = false;
            res.detail = e.what();
        }
        report.checks.push_back(res);
    }

    // Deterministic circular orbits.
    {
        const WalkerConstellation walker = WalkerConstellation::build(shell, settings.inter_orbit_phase_rad);
        Rng orbit_rng(mix_seed(settings.seed, 1));
        const auto times = snapshot_times(walker, settings.snapshots, settings.snapshot_step_s, orbit_rng);
        const auto obs = snapshot_sample(walker, user, times, orbit_rng);
        std::vector<double> gs, ts, vs;
        double visible = 0.0;
        for (const auto &o : obs)
        {
            visible += static_cast<double>(o.visible_count);
            if (!o.observed)
                continue;
            gs.push_back(o.gain);
            ts.push_back(o.delay_s);
            vs.push_back(o.doppler_hz);
        }
        if (!gs.empty())
        {
            // Discrete orbital planes cluster the Doppler support, most strongly at low latitude.
            const double doppler_limit = user.user_polar_rad <= deg_to_rad(30.0) + 1e-9 ? 0.05 : 0.10;
            report.checks.push_back(below("circular_orbit_ks_gain", ks_distance(gs, gcdf), 0.03));
            report.checks.push_back(below("circular_orbit_ks_delay", ks_distance(ts, tcdf), 0.03));
            report.checks.push_back(below("circular_orbit_ks_doppler", ks_distance(vs, vcdf), doppler_limit));
        }
        const double mean_visible = visible / static_cast<double>(std::max<std::size_t>(1, obs.size()));
        report.checks.push_back(below("circular_orbit_mean_visible_rel_error",
                                      std::abs(mean_visible / model.avg_visible() - 1.0), 0.05));

        // Closed-form Doppler against the slant-range rate of the propagator.
        double worst = 0.0;
        Rng pick(mix_seed(settings.seed, 2));
        int done = 0;
        while (done < 100)
        {
            const double t = walker.period_s() * 10.0 * uniform01(pick);
            const std::size_t idx = static_cast<std::size_t>(uniform01(pick) * walker.size());
            const SatellitePoint p = walker.point(idx, t);
            if (cos_central_angle(user.user_polar_rad, p.theta_rad, p.phi_rad) < std::cos(user.sigma_max_rad))
                continue;
            const double analytic = doppler_hz(shell, user, p);
            const double numeric = finite_difference_doppler_hz(walker, user, idx, t);
            worst = std::max(worst, std::abs(numeric - analytic) / std::max(std::abs(analytic), 1.0));
            ++done;
        }
        report.checks.push_back(below("doppler_vs_range_rate", worst, 1e-3));
    }

    // NBPP sampler against the closed-form polar-angle CDF.
    {
        const NbppModel nbpp{shell, MarkMode::independent};
        Rng srng(mix_seed(settings.seed, 3));
        std::vector<double> phis(std::max<std::size_t>(settings.mc_samples, 1000));
        for (auto &v : phis)
            v = nbpp.draw(srng).phi_rad;
        report.checks.push_back(below("nbpp_ks_polar_angle", ks_distance(phis, [&](double p) { return phi_cdf(shell, p); }),
                                      1.63 / std::sqrt(static_cast<double>(phis.size()))));
    }
    return report;
}

} // namespace leochan
