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

// leochan command-line front end: coverage sweeps, distribution tables,
// scattering functions and the validation report.

#include "leochan/channel.hpp"
#include "leochan/config.hpp"
#include "leochan/errors.hpp"
#include "leochan/quadrature.hpp"
#include "leochan/validation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace leochan;
using json = nlohmann::ordered_json;

namespace
{

enum ExitCode
{
    exit_ok = 0,
    exit_validation = 1,
    exit_config = 2,
    exit_geometry = 3,
    exit_resolution = 4,
};

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

json config_json(const RunConfig &cfg)
{
    json j = json::object();
    for (const auto &[k, v] : cfg.resolved())
        j[k] = v;
    return j;
}

std::filesystem::path output_path(const RunConfig &cfg, const std::string &name, const std::string &ext)
{
    std::filesystem::create_directories(cfg.out_dir);
    return std::filesystem::path(cfg.out_dir) / (name + "." + ext);
}

void write_json(const std::filesystem::path &path, const json &j)
{
    std::ofstream out(path);
    out << j.dump(2) << "\n";
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

void write_table(const RunConfig &cfg, const std::string &command, const std::string &name, const Table &t)
{
    if (cfg.format == "json")
    {
        json j;
        j["command"] = command;
        j["config"] = config_json(cfg);
        j["columns"] = t.columns;
        j["rows"] = t.rows;
        write_json(output_path(cfg, name, "json"), j);
        return;
    }
    const auto path = output_path(cfg, name, "csv");
    std::ofstream out(path);
    out << "# leochan " << command << " " << cfg.resolved_line() << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto &row : t.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << number(row[i]);
        out << "\n";
    }
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

int cmd_coverage(const RunConfig &cfg)
{
    Table t{{"min_elev_deg", "latitude_deg", "p_sat", "avg_visible", "availability"}, {}};
    const auto n = static_cast<std::size_t>(std::floor((cfg.sweep_lat_max_deg - cfg.sweep_lat_min_deg) / cfg.sweep_lat_step_deg + 1e-9));
    for (double psi : cfg.sweep_min_elev_deg)
    {
        for (std::size_t k = 0; k <= n; ++k)
        {
            const double lat = cfg.sweep_lat_min_deg + static_cast<double>(k) * cfg.sweep_lat_step_deg;
            double p = 0.0, avg = 0.0, avail = 0.0;
            try
            {
                const CapModel model(cfg.shell, UserGeometry::from_latitude(cfg.shell, deg_to_rad(lat), deg_to_rad(psi)));
                p = model.p_sat();
                avg = model.avg_visible();
                avail = model.availability();
            }
            catch (const NoVisibleSatellites &)
            {
            }
            t.rows.push_back({psi, lat, p, avg, avail});
        }
    }
    write_table(cfg, "coverage", "coverage", t);
    return exit_ok;
}

int cmd_distributions(const RunConfig &cfg)
{
    const UserGeometry user = cfg.user();
    const CapModel model(cfg.shell, user);
    const double nu_max = max_doppler(cfg.shell, user);
    const std::size_t n = static_cast<std::size_t>(cfg.sweep_points);

    // Optional Monte Carlo columns from visible NBPP satellites.
    std::vector<double> mc_gain, mc_delay, mc_doppler;
    if (cfg.mc_samples > 0)
    {
        Rng rng(cfg.seed);
        const VisibleSampler sampler(model);
        for (std::size_t i = 0; i < cfg.mc_samples; ++i)
        {
            const SatellitePoint p = sampler.draw(rng);
            const double sigma = central_angle(user.user_polar_rad, p.theta_rad, p.phi_rad);
            mc_gain.push_back(gain(cfg.shell, std::min(sigma, user.sigma_max_rad)));
            mc_delay.push_back(delay(cfg.shell, std::min(sigma, user.sigma_max_rad)));
            mc_doppler.push_back(doppler_hz(cfg.shell, user, p));
        }
        std::sort(mc_gain.begin(), mc_gain.end());
        std::sort(mc_delay.begin(), mc_delay.end());
        std::sort(mc_doppler.begin(), mc_doppler.end());
    }
    auto empirical = [](const std::vector<double> &sorted, double x) {
        return static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) /
               static_cast<double>(sorted.size());
    };
    const bool mc = cfg.mc_samples > 0;

    auto sweep = [&](double lo, double hi, std::size_t i) { return lo + (hi - lo) * static_cast<double>(i) / (n - 1); };

    Table g{{"gain", "cdf", "pdf"}, std::vector<std::vector<double>>(n)};
    Table d{{"delay_s", "cdf", "pdf"}, std::vector<std::vector<double>>(n)};
    Table v{{"doppler_hz", "cdf_ascending", "cdf_descending", "cdf_mixed"}, std::vector<std::vector<double>>(n)};
    if (mc)
    {
        g.columns.push_back("empirical_cdf");
        d.columns.push_back("empirical_cdf");
        v.columns.push_back("empirical_cdf");
    }
    std::vector<double> nu_points(n);
    for (std::size_t i = 0; i < n; ++i)
        nu_points[i] = sweep(-nu_max, nu_max, i);
    const auto cdf_up = doppler_cdf_curve(model, nu_points, Mark::ascending);
    const auto cdf_down = doppler_cdf_curve(model, nu_points, Mark::descending);
    parallel_for(n, [&](std::size_t i) {
        const double x = sweep(model.gain_min(), model.gain_max(), i);
        g.rows[i] = {x, gain_cdf(model, x), gain_pdf(model, x)};
        const double t = sweep(model.delay_min_s(), model.delay_max_s(), i);
        d.rows[i] = {t, delay_cdf(model, t), delay_pdf(model, t)};
        const double nu = nu_points[i];
        v.rows[i] = {nu, cdf_up[i], cdf_down[i], 0.5 * cdf_up[i] + 0.5 * cdf_down[i]};
        if (mc)
        {
            g.rows[i].push_back(empirical(mc_gain, x));
            d.rows[i].push_back(empirical(mc_delay, t));
            v.rows[i].push_back(empirical(mc_doppler, nu));
        }
    });
    write_table(cfg, "distributions", "gain", g);
    write_table(cfg, "distributions", "delay", d);
    write_table(cfg, "distributions", "doppler_cdf", v);

    DopplerGridSpec spec = cfg.doppler_grid();
    spec.nu_min_hz = -nu_max;
    spec.nu_max_hz = nu_max;
    const DopplerPdf pdf = doppler_pdf_grid(model, spec);
    // Cell centres, padded with one empty cell on each side of the support so that
    // trapezoid integration of the file reproduces the histogram mass.
    Table p{{"doppler_hz", "pdf"}, {}};
    const double step = pdf.nu.step();
    p.rows.push_back({pdf.nu.center(0) - step, 0.0});
    for (std::size_t j = 0; j < pdf.nu.cells; ++j)
        p.rows.push_back({pdf.nu.center(j), pdf.pdf[j]});
    p.rows.push_back({pdf.nu.center(pdf.nu.cells - 1) + step, 0.0});
    write_table(cfg, "distributions", "doppler_pdf", p);
    return exit_ok;
}

json summary_json(const ChannelSummary &s)
{
    return json{{"path_loss_db", s.path_loss_db},
                {"rho2", s.rho2},
                {"rho2_grid", s.rho2_grid},
                {"mean_delay_s", s.mean_delay_s},
                {"rms_delay_spread_s", s.rms_delay_spread_s},
                {"mean_doppler_hz", s.mean_doppler_hz},
                {"grid_mean_doppler_hz", s.grid_mean_doppler_hz},
                {"rms_doppler_spread_hz", s.rms_doppler_spread_hz},
                {"channel_spread", s.channel_spread},
                {"availability", s.availability}};
}

int cmd_scattering(const RunConfig &cfg)
{
    const UserGeometry user = cfg.user();
    const CapModel model(cfg.shell, user);
    const double nu_max = max_doppler(cfg.shell, user);
    const JointGridSpec spec = resolve(model, cfg.joint_grid(), nu_max);
    const ScatteringGrid grid = scattering_function(model, spec);

    Table m;
    m.columns.push_back("tau_s");
    for (std::size_t j = 0; j < grid.nu.cells; ++j)
        m.columns.push_back(number(grid.nu.center(j)));
    for (std::size_t i = 0; i < grid.tau.cells; ++i)
    {
        std::vector<double> row{grid.tau.center(i)};
        for (std::size_t j = 0; j < grid.nu.cells; ++j)
            row.push_back(grid.values.at(i, j));
        m.rows.push_back(std::move(row));
    }
    write_table(cfg, "scattering", "scattering", m);

    const ChannelSummary s = global_params(model, grid);
    json j;
    j["config"] = config_json(cfg);
    j["summary"] = summary_json(s);
    j["grid"] = json{{"tau_cells", grid.tau.cells},
                     {"nu_cells", grid.nu.cells},
                     {"tau_min_s", grid.tau.lo},
                     {"tau_max_s", grid.tau.hi},
                     {"nu_min_hz", grid.nu.lo},
                     {"nu_max_hz", grid.nu.hi},
                     {"tau_step_s", grid.tau.step()},
                     {"nu_step_hz", grid.nu.step()},
                     {"requested_tau_step_s", grid.tau.requested_step},
                     {"requested_nu_step_hz", grid.nu.requested_step}};
    j["max_doppler_hz"] = nu_max;
    write_json(output_path(cfg, "summary", "json"), j);
    return exit_ok;
}

int cmd_validate(const RunConfig &cfg)
{
    const ValidationReport report = run_validation(cfg.shell, cfg.user(), cfg.validation_settings());
    json checks = json::array();
    for (const auto &c : report.checks)
        checks.push_back(json{{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"passed", c.passed}, {"detail", c.detail}});
    json j;
    j["config"] = config_json(cfg);
    j["checks"] = checks;
    j["all_passed"] = report.all_passed();
    write_json(output_path(cfg, "validate_report", "json"), j);
    for (const auto &c : report.checks)
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " value=" << number(c.value)
                  << " threshold=" << number(c.threshold) << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    return report.all_passed() ? exit_ok : exit_validation;
}

struct Flags
{
    std::string config;
    double lat_deg = 0.0;
    double min_elev_deg = 0.0;
    std::uint64_t seed = 0;
    std::string out;
    std::string format;
    std::size_t mc_samples = 0;
    double nu_step_hz = 0.0;
    double tau_step_s = 0.0;
    std::vector<CLI::Option *> opts;
};

void add_flags(CLI::App *sub, Flags &f)
{
    f.opts.push_back(sub->add_option("--config", f.config, "key = value configuration file"));
    f.opts.push_back(sub->add_option("--lat-deg", f.lat_deg, "user latitude in degrees"));
    f.opts.push_back(sub->add_option("--min-elev-deg", f.min_elev_deg, "minimum elevation in degrees"));
    f.opts.push_back(sub->add_option("--seed", f.seed, "random seed"));
    f.opts.push_back(sub->add_option("--out", f.out, "output directory"));
    f.opts.push_back(sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"csv", "json"})));
    f.opts.push_back(sub->add_option("--mc-samples", f.mc_samples, "Monte Carlo sample count"));
    f.opts.push_back(sub->add_option("--nu-step-hz", f.nu_step_hz, "Doppler grid step in Hz"));
    f.opts.push_back(sub->add_option("--tau-step-s", f.tau_step_s, "delay grid step in seconds"));
}

RunConfig build_config(const Flags &f)
{
    RunConfig cfg;
    auto given = [&](std::size_t i) { return f.opts[i]->count() > 0; };
    if (given(0))
        cfg.apply_file(f.config);
    if (given(1))
        cfg.lat_deg = f.lat_deg;
    if (given(2))
        cfg.min_elev_deg = f.min_elev_deg;
    if (given(3))
        cfg.seed = f.seed;
    if (given(4))
        cfg.out_dir = f.out;
    if (given(5))
        cfg.format = f.format;
    if (given(6))
        cfg.mc_samples = f.mc_samples;
    if (given(7))
        cfg.nu_step_hz = cfg.doppler_nu_step_hz = f.nu_step_hz;
    if (given(8))
        cfg.tau_step_s = f.tau_step_s;
    cfg.validate();
    return cfg;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Stochastic channel model for a LEO satellite shell"};
    app.require_subcommand(1);
    struct Command
    {
        const char *name;
        const char *help;
        int (*run)(const RunConfig &);
    };
    const Command commands[] = {
        {"coverage", "average visible satellites over a latitude sweep", cmd_coverage},
        {"distributions", "gain, delay and Doppler CDF/PDF tables", cmd_distributions},
        {"scattering", "delay-Doppler scattering function and global parameters", cmd_scattering},
        {"validate", "run the oracle checks and write a JSON report", cmd_validate},
    };
    std::vector<Flags> flags(std::size(commands));
    std::vector<CLI::App *> subs;
    for (std::size_t i = 0; i < std::size(commands); ++i)
    {
        subs.push_back(app.add_subcommand(commands[i].name, commands[i].help));
        add_flags(subs.back(), flags[i]);
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try
    {
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (subs[i]->parsed())
                return commands[i].run(build_config(flags[i]));
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    catch (const NoVisibleSatellites &e)
    {
        std::cerr << "geometry error: " << e.what() << "\n";
        return exit_geometry;
    }
    catch (const DomainError &e)
    {
        std::cerr << "geometry error: " << e.what() << "\n";
        return exit_geometry;
    }
    catch (const ResolutionError &e)
    {
        std::cerr << "resolution error: " << e.what() << "\n";
        return exit_resolution;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    }
    return exit_config;
}
