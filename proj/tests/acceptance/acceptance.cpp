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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "leochan/channel.hpp"
#include "leochan/errors.hpp"
#include "leochan/orbit_sim.hpp"
#include "leochan/quadrature.hpp"
#include "leochan/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace leochan;

namespace
{

const ShellConfig shell{};

UserGeometry equator_user() { return UserGeometry::make(shell, half_pi, deg_to_rad(30.0)); }
UserGeometry high_user() { return UserGeometry::make(shell, deg_to_rad(30.0), deg_to_rad(10.0)); }

struct Outcome
{
    bool passed = true;
    std::string detail;

    void require(bool ok, const char *fmt, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof buf, fmt, args...);
        if (!detail.empty())
            detail += "; ";
        detail += buf;
        if (!ok)
        {
            detail += " [X]";
            passed = false;
        }
    }
};

bool within_rel(double value, double target, double rel) { return std::abs(value / target - 1.0) <= rel; }

Outcome coverage()
{
    Outcome o;
    const double eq = CapModel(shell, equator_user()).avg_visible();
    const double mid = CapModel(shell, UserGeometry::from_latitude(shell, deg_to_rad(53.0), deg_to_rad(30.0))).avg_visible();
    o.require(within_rel(eq, 9.6, 0.02), "avg_visible(lat 0) = %.4f, target 9.6 +- 2%%", eq);
    o.require(within_rel(mid, 25.6, 0.02), "avg_visible(lat 53) = %.4f, target 25.6 +- 2%%", mid);
    return o;
}

Outcome delay_support()
{
    Outcome o;
    const CapModel eq(shell, equator_user()), hi(shell, high_user());
    o.require(within_rel(eq.delay_min_s(), 1.83e-3, 0.015), "equator tau_min = %.4f ms", eq.delay_min_s() * 1e3);
    o.require(within_rel(eq.delay_max_s(), 3.33e-3, 0.015), "equator tau_max = %.4f ms", eq.delay_max_s() * 1e3);
    o.require(within_rel(hi.delay_min_s(), 3.30e-3, 0.015), "high tau_min = %.4f ms", hi.delay_min_s() * 1e3);
    o.require(within_rel(hi.delay_max_s(), 6.10e-3, 0.015), "high tau_max = %.4f ms", hi.delay_max_s() * 1e3);
    return o;
}

Outcome doppler_max()
{
    Outcome o;
    const double eq = max_doppler(shell, equator_user()), hi = max_doppler(shell, high_user());
    o.require(within_rel(eq, 246.2e3, 0.01), "equator nu_max = %.2f kHz", eq / 1e3);
    o.require(within_rel(hi, 246.8e3, 0.01), "high nu_max = %.2f kHz", hi / 1e3);
    return o;
}

Outcome channel_table()
{
    Outcome o;
    struct Row
    {
        const char *name;
        UserGeometry user;
        double pl, mean_ms, rms_ms, rms_khz;
    };
    for (const Row &r : {Row{"equator", equator_user(), 117.6, 2.5, 0.43, 134.5},
                         Row{"high", high_user(), 122.6, 4.5, 0.80, 137.9}})
    {
        const auto start = std::chrono::steady_clock::now();
        const ChannelSummary s = global_params(CapModel(shell, r.user), JointGridSpec{});
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(std::abs(s.path_loss_db - r.pl) <= 0.2, "%s PL = %.3f dB", r.name, s.path_loss_db);
        o.require(std::abs(s.mean_delay_s * 1e3 - r.mean_ms) <= 0.1, "mean delay = %.4f ms", s.mean_delay_s * 1e3);
        o.require(std::abs(s.rms_delay_spread_s * 1e3 - r.rms_ms) <= 0.03, "rms delay = %.4f ms",
                  s.rms_delay_spread_s * 1e3);
        o.require(std::abs(s.rms_doppler_spread_hz / 1e3 - r.rms_khz) <= 3.0, "rms Doppler = %.3f kHz",
                  s.rms_doppler_spread_hz / 1e3);
        o.require(s.channel_spread > 100.0, "spread = %.2f", s.channel_spread);
        o.require(secs <= 600.0, "%.1f s", secs);
    }
    return o;
}

Outcome monte_carlo()
{
    Outcome o;
    for (const UserGeometry &user : {equator_user(), high_user()})
    {
        const CapModel model(shell, user);
        const VisibleSampler sampler(model);
        Rng rng(2024);
        const std::size_t n = 1000000;
        std::vector<double> g(n), t(n), v(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const SatellitePoint p = sampler.draw(rng);
            const double sigma = std::min(central_angle(user, p.theta_rad, p.phi_rad), user.sigma_max_rad);
            g[i] = gain(shell, sigma);
            t[i] = delay(shell, sigma);
            v[i] = doppler_hz(shell, user, p);
        }
        const double nu_max = max_doppler(shell, user);
        const double kg = ks_distance(g, tabulate_gain_cdf(model));
        const double kt = ks_distance(t, tabulate_delay_cdf(model));
        const double kv = ks_distance(v, tabulate_doppler_cdf(model, nu_max));
        const char *name = user.user_polar_rad == half_pi ? "equator" : "high";
        o.require(kg < 0.005, "%s KS gain = %.5f", name, kg);
        o.require(kt < 0.005, "KS delay = %.5f", kt);
        o.require(kv < 0.005, "KS Doppler = %.5f", kv);
    }
    return o;
}

Outcome circular_orbits()
{
    Outcome o;
    const auto walker = WalkerConstellation::build(shell);
    double ks_doppler[2] = {0.0, 0.0};
    int k = 0;
    for (const UserGeometry &user : {equator_user(), high_user()})
    {
        const CapModel model(shell, user);
        Rng rng(77);
        const auto times = snapshot_times(walker, 50000, 1.0, rng);
        const auto obs = snapshot_sample(walker, user, times, rng);
        std::vector<double> g, t, v;
        for (const auto &s : obs)
            if (s.observed)
            {
                g.push_back(s.gain);
                t.push_back(s.delay_s);
                v.push_back(s.doppler_hz);
            }
        const double kg = ks_distance(g, tabulate_gain_cdf(model));
        const double kt = ks_distance(t, tabulate_delay_cdf(model));
        const double kv = ks_distance(v, tabulate_doppler_cdf(model, max_doppler(shell, user)));
        const bool equator = k == 0;
        const char *name = equator ? "equator" : "high";
        o.require(kg < 0.03, "%s KS gain = %.4f", name, kg);
        o.require(kt < 0.03, "KS delay = %.4f", kt);
        o.require(kv < (equator ? 0.10 : 0.05), "KS Doppler = %.4f (n = %zu)", kv, v.size());
        ks_doppler[k++] = kv;
    }
    o.require(ks_doppler[0] > ks_doppler[1], "Doppler KS ordering %.4f (equator) > %.4f (high)", ks_doppler[0],
              ks_doppler[1]);
    return o;
}

Outcome derivatives()
{
    Outcome o;
    double worst_prime = 0.0, worst_gain = 0.0, worst_delay = 0.0;
    for (const UserGeometry &user : {equator_user(), high_user()})
    {
        const CapModel m(shell, user);
        for (int i = 1; i <= 20; ++i)
        {
            const double u = i / 21.0;
            const double sig = m.sigma_min() + u * (m.sigma_max() - m.sigma_min());
            const double c = std::cos(sig), h = 1e-8;
            const double fd = (m.p_cap(std::acos(c - h)) - m.p_cap(std::acos(c + h))) / (2 * h);
            worst_prime = std::max(worst_prime, std::abs(-m.p_cap_prime(sig) / fd - 1.0));

            const double g = m.gain_min() + u * (m.gain_max() - m.gain_min()), hg = 1e-6 * g;
            const double fg = (gain_cdf(m, g + hg) - gain_cdf(m, g - hg)) / (2 * hg);
            worst_gain = std::max(worst_gain, std::abs(gain_pdf(m, g) / fg - 1.0));

            const double t = m.delay_min_s() + u * (m.delay_max_s() - m.delay_min_s()), ht = 1e-9;
            const double ft = (delay_cdf(m, t + ht) - delay_cdf(m, t - ht)) / (2 * ht);
            worst_delay = std::max(worst_delay, std::abs(delay_pdf(m, t) / ft - 1.0));
        }
    }
    o.require(worst_prime < 1e-4, "p_cap' rel err = %.2e", worst_prime);
    o.require(worst_gain < 1e-3, "gain pdf rel err = %.2e", worst_gain);
    o.require(worst_delay < 1e-3, "delay pdf rel err = %.2e", worst_delay);
    return o;
}

Outcome doppler_function()
{
    Outcome o;
    const auto walker = WalkerConstellation::build(shell);
    Rng rng(31);
    double worst = 0.0;
    int done = 0;
    for (const UserGeometry &user : {equator_user(), high_user()})
        for (int n = 0; n < 50;)
        {
            const double t = walker.period_s() * 10.0 * uniform01(rng);
            const auto idx = static_cast<std::size_t>(uniform01(rng) * walker.size());
            const SatellitePoint p = walker.point(idx, t);
            if (central_angle(user, p.theta_rad, p.phi_rad) > user.sigma_max_rad)
                continue;
            const double exact = doppler_hz(shell, user, p);
            const double fd = finite_difference_doppler_hz(walker, user, idx, t);
            worst = std::max(worst, std::abs(fd - exact) / std::max(std::abs(exact), 1.0));
            ++n;
            ++done;
        }
    o.require(worst < 1e-3, "%d pairs, worst relative error = %.2e", done, worst);
    return o;
}

Outcome dual_path_loss()
{
    Outcome o;
    const CapModel m(shell, equator_user());
    const double rho2 = path_loss_proposition(m).rho2;
    JointGridSpec spec;
    double prev = 1.0;
    for (int level = 0; level < 4; ++level)
    {
        const double gap = std::abs(scattering_function(m, spec).integral() / rho2 - 1.0);
        o.require(gap < 0.01 && gap < prev, "gap(steps / %d) = %.3e", 1 << level, gap);
        prev = gap;
        spec.tau_step_s *= 0.5;
        spec.nu_step_hz *= 0.5;
    }
    return o;
}

Outcome normalization()
{
    Outcome o;
    double worst_mass = 0.0, worst_sym = 0.0;
    bool monotone = true;
    for (const UserGeometry &user : {equator_user(), high_user()})
    {
        const CapModel m(shell, user);
        const double nu_max = max_doppler(shell, user);
        worst_mass = std::max(worst_mass, std::abs(integrate_tanh_sinh([&](double g) { return gain_pdf(m, g); },
                                                                       m.gain_min(), m.gain_max(), 1e-10) - 1.0));
        worst_mass = std::max(worst_mass, std::abs(integrate_tanh_sinh([&](double t) { return delay_pdf(m, t); },
                                                                       m.delay_min_s(), m.delay_max_s(), 1e-10) - 1.0));
        const DopplerPdf d = doppler_pdf_grid(m, {});
        double dm = 0.0;
        for (double p : d.pdf)
            dm += p * d.nu.step();
        worst_mass = std::max(worst_mass, std::abs(dm - 1.0));
        for (Mark a : {Mark::ascending, Mark::descending})
        {
            const JointPdf j = joint_pdf_grid(m, {}, a);
            double jm = 0.0;
            for (double p : j.pdf.values)
                jm += p * j.tau.step() * j.nu.step();
            worst_mass = std::max(worst_mass, std::abs(jm - 1.0));
        }

        const int n = 400;
        std::vector<double> nus(n);
        for (int i = 0; i < n; ++i)
            nus[i] = -nu_max + 2.0 * nu_max * i / (n - 1);
        const auto up = doppler_cdf_curve(m, nus, Mark::ascending);
        const auto down = doppler_cdf_curve(m, nus, Mark::descending);
        double pg = 0.0, pt = 0.0;
        for (int i = 0; i < n; ++i)
        {
            const double g = gain_cdf(m, m.gain_min() + (m.gain_max() - m.gain_min()) * i / (n - 1));
            const double t = delay_cdf(m, m.delay_min_s() + (m.delay_max_s() - m.delay_min_s()) * i / (n - 1));
            monotone = monotone && g >= pg && t >= pt && (i == 0 || (up[i] >= up[i - 1] && down[i] >= down[i - 1]));
            pg = g;
            pt = t;
        }
        for (int i = 0; i < n; i += 20)
            worst_sym = std::max(worst_sym, std::abs(doppler_cdf(m, nus[i], Mark::ascending) -
                                                     (1.0 - doppler_cdf(m, -nus[i], Mark::descending))));
    }
    o.require(worst_mass < 1e-6, "worst |mass - 1| = %.2e", worst_mass);
    o.require(monotone, "CDF sweeps monotone: %s", monotone ? "yes" : "no");
    o.require(worst_sym < 1e-6, "mark symmetry error = %.2e", worst_sym);
    return o;
}

Outcome rayleigh()
{
    Outcome o;
    const CapModel m(shell, equator_user());
    const VisibleSampler sampler(m);
    Rng rng(99);
    const std::size_t n = 1000000;
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const SatellitePoint p = sampler.draw(rng);
        const double g = gain(shell, std::min(central_angle(m.user(), p.theta_rad, p.phi_rad), m.sigma_max()));
        y[i] = -std::log1p(-uniform01(rng)) * g;
    }
    // log-spaced table of the exact CDF; its interpolation error is reported alongside
    const int points = 3001;
    const double lo = std::log(m.gain_min() * 1e-7), hi = std::log(m.gain_max() * 40.0);
    std::vector<double> xs(points), fs(points);
    parallel_for(points, [&](std::size_t i) {
        xs[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / (points - 1));
        fs[i] = rayleigh_gain_cdf(m, xs[i]);
    });
    const TabulatedCdf table(xs, fs);
    double interp = 0.0;
    for (int i = 0; i + 1 < points; i += 15)
    {
        const double mid = std::sqrt(xs[i] * xs[i + 1]);
        interp = std::max(interp, std::abs(table(mid) - rayleigh_gain_cdf(m, mid)));
    }
    const double ks = ks_distance(y, table);
    o.require(ks < 0.005, "KS = %.5f (table interpolation error %.1e)", ks, interp);

    const ScatteringGrid a = scattering_function(m, {}), b = scattering_function_rayleigh(m, {});
    double worst = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < a.values.values.size(); ++i)
    {
        worst = std::max(worst, std::abs(a.values.values[i] - b.values.values[i]));
        peak = std::max(peak, a.values.values[i]);
    }
    o.require(worst <= 1e-9 * peak, "faded vs plain scattering max diff / peak = %.1e", worst / peak);
    return o;
}

} // namespace

int main()
{
    struct Criterion
    {
        const char *name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"coverage", coverage},
        {"delay support", delay_support},
        {"maximum Doppler", doppler_max},
        {"global channel parameters", channel_table},
        {"Monte Carlo oracle", monte_carlo},
        {"circular-orbit oracle", circular_orbits},
        {"derivative consistency", derivatives},
        {"Doppler function vs range rate", doppler_function},
        {"dual path loss", dual_path_loss},
        {"normalization", normalization},
        {"Rayleigh extension", rayleigh},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try
        {
            o = criteria[i].run();
        }
        catch (const std::exception &e)
        {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %s: %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
        failed += !o.passed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
