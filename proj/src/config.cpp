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

#include "leochan/config.hpp"

#include "leochan/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

namespace leochan
{

namespace
{

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string &key, const std::string &text)
{
    const std::string t = trim(text);
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v))
        throw ConfigError(key + ": expected a number, got '" + text + "'");
    return v;
}

std::uint64_t parse_count(const std::string &key, const std::string &text)
{
    const std::string t = trim(text);
    std::uint64_t v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
        throw ConfigError(key + ": expected a non-negative integer, got '" + text + "'");
    return v;
}

std::string fmt(double v)
{
    // shortest form that round-trips
    for (int p = 6; p < std::numeric_limits<double>::max_digits10; ++p)
    {
        std::ostringstream s;
        s << std::setprecision(p) << v;
        if (std::stod(s.str()) == v)
            return s.str();
    }
    std::ostringstream s;
    s << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
    return s.str();
}

struct Field
{
    const char *key;
    std::function<void(RunConfig &, const std::string &, const std::string &)> set;
    std::function<std::string(const RunConfig &)> get;
};

#define LEOCHAN_REAL(name, expr, scale)                                                                                  \
    Field                                                                                                              \
    {                                                                                                                  \
        name, [](RunConfig &c, const std::string &k, const std::string &v) { c.expr = parse_double(k, v) * (scale); }, \
            [](const RunConfig &c) { return fmt(c.expr / (scale)); }                                                   \
    }

#define LEOCHAN_COUNT(name, expr, type)                                                                                \
    Field                                                                                                              \
    {                                                                                                                  \
        name, [](RunConfig &c, const std::string &k, const std::string &v) { c.expr = static_cast<type>(parse_count(k, v)); }, \
            [](const RunConfig &c) { return std::to_string(c.expr); }                                                  \
    }

const std::vector<Field> &fields()
{
    static const std::vector<Field> table{
        LEOCHAN_REAL("shell.earth_radius_km", shell.earth_radius_m, 1e3),
        LEOCHAN_REAL("shell.altitude_km", shell.altitude_m, 1e3),
        LEOCHAN_REAL("shell.speed_mps", shell.sat_speed_mps, 1.0),
        LEOCHAN_REAL("shell.carrier_hz", shell.carrier_hz, 1.0),
        LEOCHAN_REAL("shell.inclination_deg", shell.inclination_rad, pi / 180.0),
        LEOCHAN_COUNT("shell.n_sats", shell.n_sats, int),
        LEOCHAN_COUNT("shell.n_per_orbit", shell.n_per_orbit, int),
        LEOCHAN_REAL("shell.orbit_spacing_deg", shell.orbit_spacing_rad, pi / 180.0),
        LEOCHAN_REAL("shell.inter_orbit_phase_deg", inter_orbit_phase_deg, 1.0),
        LEOCHAN_REAL("user.lat_deg", lat_deg, 1.0),
        LEOCHAN_REAL("user.min_elev_deg", min_elev_deg, 1.0),
        LEOCHAN_REAL("user.sweep_lat_min_deg", sweep_lat_min_deg, 1.0),
        LEOCHAN_REAL("user.sweep_lat_max_deg", sweep_lat_max_deg, 1.0),
        LEOCHAN_REAL("user.sweep_lat_step_deg", sweep_lat_step_deg, 1.0),
        Field{"user.sweep_min_elev_deg",
              [](RunConfig &c, const std::string &k, const std::string &v) {
                  std::vector<double> out;
                  std::stringstream ss(v);
                  std::string item;
                  while (std::getline(ss, item, ','))
                      out.push_back(parse_double(k, item));
                  if (out.empty())
                      throw ConfigError(k + ": expected a comma-separated list of elevations");
                  c.sweep_min_elev_deg = out;
              },
              [](const RunConfig &c) {
                  std::string s;
                  for (std::size_t i = 0; i < c.sweep_min_elev_deg.size(); ++i)
                      s += (i ? "," : "") + fmt(c.sweep_min_elev_deg[i]);
                  return s;
              }},
        LEOCHAN_REAL("grid.nu_step_hz", nu_step_hz, 1.0),
        LEOCHAN_REAL("grid.doppler_nu_step_hz", doppler_nu_step_hz, 1.0),
        LEOCHAN_REAL("grid.tau_step_s", tau_step_s, 1.0),
        LEOCHAN_COUNT("grid.sweep_points", sweep_points, int),
        LEOCHAN_COUNT("mc.samples", mc_samples, std::size_t),
        LEOCHAN_COUNT("mc.snapshots", mc_snapshots, std::size_t),
        LEOCHAN_REAL("mc.snapshot_step_s", snapshot_step_s, 1.0),
        LEOCHAN_COUNT("mc.seed", seed, std::uint64_t),
    };
    return table;
}

#undef LEOCHAN_REAL
#undef LEOCHAN_COUNT

} // namespace

void RunConfig::set(const std::string &key, const std::string &value)
{
    for (const auto &f : fields())
    {
        if (key == f.key)
        {
            f.set(*this, key, value);
            return;
        }
    }
    throw ConfigError("unknown configuration key '" + key + "'");
}

void RunConfig::apply_text(const std::string &text, const std::string &origin)
{
    std::istringstream in(text);
    std::string line;
    std::set<std::string> seen;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        const std::string where = origin + ":" + std::to_string(lineno) + ": ";
        if (eq == std::string::npos)
            throw ConfigError(where + "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second)
            throw ConfigError(where + "duplicate key '" + key + "'");
        try
        {
            set(key, value);
        }
        catch (const ConfigError &e)
        {
            throw ConfigError(where + e.what());
        }
    }
}

void RunConfig::apply_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    apply_text(buf.str(), path);
}

void RunConfig::validate() const
{
    shell.validate();
    if (!(lat_deg >= -90.0 && lat_deg <= 90.0))
        throw ConfigError("user.lat_deg must lie in [-90, 90]");
    if (!(min_elev_deg >= 0.0 && min_elev_deg < 90.0))
        throw ConfigError("user.min_elev_deg must lie in [0, 90)");
    for (double e : sweep_min_elev_deg)
        if (!(e >= 0.0 && e < 90.0))
            throw ConfigError("user.sweep_min_elev_deg entries must lie in [0, 90)");
    if (!(sweep_lat_min_deg >= -90.0 && sweep_lat_max_deg <= 90.0 && sweep_lat_min_deg <= sweep_lat_max_deg))
        throw ConfigError("latitude sweep bounds must satisfy -90 <= min <= max <= 90");
    if (!(sweep_lat_step_deg > 0.0))
        throw ConfigError("user.sweep_lat_step_deg must be positive");
    if (!(nu_step_hz > 0.0) || !(doppler_nu_step_hz > 0.0) || !(tau_step_s > 0.0))
        throw ConfigError("grid steps must be positive");
    if (sweep_points < 2)
        throw ConfigError("grid.sweep_points must be at least 2");
    if (!(snapshot_step_s > 0.0))
        throw ConfigError("mc.snapshot_step_s must be positive");
    if (format != "csv" && format != "json")
        throw ConfigError("output format must be csv or json");
}

std::vector<std::pair<std::string, std::string>> RunConfig::resolved() const
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &f : fields())
        out.emplace_back(f.key, f.get(*this));
    return out;
}

std::string RunConfig::resolved_line() const
{
    std::string s;
    for (const auto &[k, v] : resolved())
        s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
}

std::vector<std::string> RunConfig::keys()
{
    std::vector<std::string> out;
    for (const auto &f : fields())
        out.emplace_back(f.key);
    return out;
}

UserGeometry RunConfig::user() const
{
    return UserGeometry::from_latitude(shell, deg_to_rad(lat_deg), deg_to_rad(min_elev_deg));
}

JointGridSpec RunConfig::joint_grid() const
{
    JointGridSpec g;
    g.nu_step_hz = nu_step_hz;
    g.tau_step_s = tau_step_s;
    return g;
}

DopplerGridSpec RunConfig::doppler_grid() const
{
    DopplerGridSpec g;
    g.nu_step_hz = doppler_nu_step_hz;
    return g;
}

ValidationSettings RunConfig::validation_settings() const
{
    ValidationSettings v;
    v.mc_samples = mc_samples;
    v.snapshots = mc_snapshots;
    v.snapshot_step_s = snapshot_step_s;
    v.inter_orbit_phase_rad = deg_to_rad(inter_orbit_phase_deg);
    v.seed = seed;
    v.grid = joint_grid();
    return v;
}

} // namespace leochan
