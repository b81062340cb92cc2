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
#include "leochan/orbit_sim.hpp"
#include "leochan/validation.hpp"

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace leochan;

namespace
{

py::array_t<double> to_array(const Grid2D &g)
{
    py::array_t<double> out({g.rows, g.cols});
    std::copy(g.values.begin(), g.values.end(), out.mutable_data());
    return out;
}

py::array_t<double> to_array(const std::vector<double> &v)
{
    py::array_t<double> out(v.size());
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::dict summary_dict(const ChannelSummary &s)
{
    py::dict d;
    d["path_loss_db"] = s.path_loss_db;
    d["rho2"] = s.rho2;
    d["rho2_grid"] = s.rho2_grid;
    d["mean_delay_s"] = s.mean_delay_s;
    d["rms_delay_spread_s"] = s.rms_delay_spread_s;
    d["mean_doppler_hz"] = s.mean_doppler_hz;
    d["grid_mean_doppler_hz"] = s.grid_mean_doppler_hz;
    d["rms_doppler_spread_hz"] = s.rms_doppler_spread_hz;
    d["channel_spread"] = s.channel_spread;
    d["availability"] = s.availability;
    return d;
}

JointGridSpec joint_spec(double nu_step_hz, double tau_step_s)
{
    JointGridSpec spec;
    spec.nu_step_hz = nu_step_hz;
    spec.tau_step_s = tau_step_s;
    return spec;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Stochastic channel model for a LEO satellite shell";
    m.attr("__version__") = "0.1.0";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NoVisibleSatellites>(m, "NoVisibleSatellites", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ResolutionError>(m, "ResolutionError", PyExc_RuntimeError);

    py::class_<ShellConfig>(m, "ShellConfig")
        .def(py::init<>())
        .def_readwrite("earth_radius_m", &ShellConfig::earth_radius_m)
        .def_readwrite("altitude_m", &ShellConfig::altitude_m)
        .def_readwrite("sat_speed_mps", &ShellConfig::sat_speed_mps)
        .def_readwrite("carrier_hz", &ShellConfig::carrier_hz)
        .def_readwrite("inclination_rad", &ShellConfig::inclination_rad)
        .def_readwrite("n_sats", &ShellConfig::n_sats)
        .def_readwrite("n_per_orbit", &ShellConfig::n_per_orbit)
        .def_readwrite("orbit_spacing_rad", &ShellConfig::orbit_spacing_rad)
        .def_readwrite("light_speed_mps", &ShellConfig::light_speed_mps)
        .def_property_readonly("shell_radius_m", &ShellConfig::shell_radius_m)
        .def("validate", &ShellConfig::validate);

    py::class_<UserGeometry>(m, "UserGeometry")
        .def_static("make", &UserGeometry::make, py::arg("shell"), py::arg("user_polar_rad"), py::arg("min_elevation_rad"))
        .def_static("from_latitude", &UserGeometry::from_latitude, py::arg("shell"), py::arg("latitude_rad"),
                    py::arg("min_elevation_rad"))
        .def_readonly("user_polar_rad", &UserGeometry::user_polar_rad)
        .def_readonly("min_elevation_rad", &UserGeometry::min_elevation_rad)
        .def_readonly("sigma_min_rad", &UserGeometry::sigma_min_rad)
        .def_readonly("sigma_max_rad", &UserGeometry::sigma_max_rad);

    py::enum_<Mark>(m, "Mark").value("ascending", Mark::ascending).value("descending", Mark::descending);

    py::class_<SatellitePoint>(m, "SatellitePoint")
        .def(py::init([](double theta, double phi, Mark mark) { return SatellitePoint{theta, phi, mark}; }),
             py::arg("theta_rad"), py::arg("phi_rad"), py::arg("mark") = Mark::ascending)
        .def_readwrite("theta_rad", &SatellitePoint::theta_rad)
        .def_readwrite("phi_rad", &SatellitePoint::phi_rad)
        .def_readwrite("mark", &SatellitePoint::mark);

    m.def("sigma_from_elevation", &sigma_from_elevation);
    m.def("slant_range", &slant_range);
    m.def("gain", &gain);
    m.def("gain_inverse", &gain_inverse);
    m.def("delay", &delay);
    m.def("delay_inverse", &delay_inverse);
    m.def("direction_angle", &direction_angle);
    m.def("doppler_hz", &doppler_hz, py::arg("shell"), py::arg("user"), py::arg("sat"));
    m.def("max_doppler", [](const ShellConfig &s, const UserGeometry &u) { return max_doppler(s, u); });
    m.def("phi_pdf", &phi_pdf);
    m.def("phi_cdf", &phi_cdf);
    m.def("arc_length", py::overload_cast<double, double, double>(&arc_length), py::arg("user_polar_rad"),
          py::arg("phi"), py::arg("sigma"));

    m.def(
        "sample_nbpp",
        [](const ShellConfig &shell, std::size_t count, std::uint64_t seed, bool physical_marks) {
            Rng rng(seed);
            const NbppModel model{shell, physical_marks ? MarkMode::physical : MarkMode::independent};
            return model.sample(count, rng);
        },
        py::arg("shell"), py::arg("count"), py::arg("seed") = 1, py::arg("physical_marks") = false);

    py::class_<CapModel>(m, "CapModel")
        .def(py::init<const ShellConfig &, const UserGeometry &, double>(), py::arg("shell"), py::arg("user"),
             py::arg("quadrature_tol") = 1e-9)
        .def("p_cap", &CapModel::p_cap)
        .def("p_cap_prime", &CapModel::p_cap_prime)
        .def_property_readonly("p_sat", &CapModel::p_sat)
        .def_property_readonly("availability", &CapModel::availability)
        .def_property_readonly("avg_visible", &CapModel::avg_visible)
        .def("visible_count_pmf", &CapModel::visible_count_pmf)
        .def_property_readonly("gain_range", [](const CapModel &c) { return py::make_tuple(c.gain_min(), c.gain_max()); })
        .def_property_readonly("delay_range_s",
                               [](const CapModel &c) { return py::make_tuple(c.delay_min_s(), c.delay_max_s()); });

    m.def("gain_cdf", &gain_cdf);
    m.def("gain_pdf", &gain_pdf);
    m.def("delay_cdf", &delay_cdf);
    m.def("delay_pdf", &delay_pdf);
    m.def("doppler_cdf", [](const CapModel &c, double nu, Mark a) { return doppler_cdf(c, nu, a); });
    m.def("doppler_cdf_mixed", [](const CapModel &c, double nu) { return doppler_cdf_mixed(c, nu); });
    m.def("joint_cdf", [](const CapModel &c, double nu, double tau, Mark a) { return joint_cdf(c, nu, tau, a); });
    m.def("rayleigh_gain_cdf", &rayleigh_gain_cdf);

    m.def(
        "doppler_pdf_grid",
        [](const CapModel &c, double nu_step_hz) {
            DopplerGridSpec spec;
            spec.nu_step_hz = nu_step_hz;
            const DopplerPdf g = doppler_pdf_grid(c, spec);
            std::vector<double> centers(g.nu.cells);
            for (std::size_t j = 0; j < centers.size(); ++j)
                centers[j] = g.nu.center(j);
            return py::make_tuple(to_array(centers), to_array(g.pdf));
        },
        py::arg("model"), py::arg("nu_step_hz") = 2.65e3);

    m.def(
        "scattering_function",
        [](const CapModel &c, double nu_step_hz, double tau_step_s) {
            const ScatteringGrid g = scattering_function(c, joint_spec(nu_step_hz, tau_step_s));
            std::vector<double> taus(g.tau.cells), nus(g.nu.cells);
            for (std::size_t i = 0; i < taus.size(); ++i)
                taus[i] = g.tau.center(i);
            for (std::size_t j = 0; j < nus.size(); ++j)
                nus[j] = g.nu.center(j);
            return py::make_tuple(to_array(taus), to_array(nus), to_array(g.values));
        },
        py::arg("model"), py::arg("nu_step_hz") = 2.61e3, py::arg("tau_step_s") = 2.8e-5);

    m.def("path_loss_db", [](const CapModel &c) { return path_loss_proposition(c).path_loss_db; });
    m.def(
        "global_params",
        [](const CapModel &c, double nu_step_hz, double tau_step_s) {
            return summary_dict(global_params(c, joint_spec(nu_step_hz, tau_step_s)));
        },
        py::arg("model"), py::arg("nu_step_hz") = 2.61e3, py::arg("tau_step_s") = 2.8e-5);

    py::class_<WalkerConstellation>(m, "WalkerConstellation")
        .def_static("build", &WalkerConstellation::build, py::arg("shell"), py::arg("inter_orbit_phase_rad") = 0.0)
        .def("__len__", &WalkerConstellation::size)
        .def_property_readonly("period_s", &WalkerConstellation::period_s)
        .def("position", &WalkerConstellation::position)
        .def("propagate", &WalkerConstellation::propagate);

    m.def("ks_distance", &ks_distance, py::arg("samples"), py::arg("cdf"));
}
