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

#ifndef LEOCHAN_CONFIG_HPP
#define LEOCHAN_CONFIG_HPP

#include "leochan/distributions.hpp"
#include "leochan/geometry.hpp"
#include "leochan/validation.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace leochan
{

// Everything a CLI run depends on. Parsed from flat `key = value` files with
// section prefixes (shell., user., grid., mc.); see config/schema.md.
struct RunConfig
{
    ShellConfig shell;
    double inter_orbit_phase_deg = 0.0;

    double lat_deg = 0.0;
    double min_elev_deg = 30.0;
    double sweep_lat_min_deg = 0.0;
    double sweep_lat_max_deg = 90.0;
    double sweep_lat_step_deg = 1.0;
    std::vector<double> sweep_min_elev_deg{10.0, 30.0};

    double nu_step_hz = 2.61e3;
    double doppler_nu_step_hz = 2.65e3;
    double tau_step_s = 2.8e-5;
    int sweep_points = 401;

    std::size_t mc_samples = 1000000;
    std::size_t mc_snapshots = 50000;
    double snapshot_step_s = 1.0;
    std::uint64_t seed = 1;

    std::string out_dir = ".";
    std::string format = "csv";

    // Applies `key = value` lines; throws ConfigError on unknown keys or bad values.
    void apply_text(const std::string &text, const std::string &origin = "config");
    void apply_file(const std::string &path);
    void set(const std::string &key, const std::string &value);

    // Throws ConfigError when the combination of values is unusable.
    void validate() const;

    // Every key with its resolved value, in schema order.
    std::vector<std::pair<std::string, std::string>> resolved() const;
    std::string resolved_line() const;

    UserGeometry user() const;
    JointGridSpec joint_grid() const;
    DopplerGridSpec doppler_grid() const;
    ValidationSettings validation_settings() const;

    static std::vector<std::string> keys();
};

} // namespace leochan

#endif
