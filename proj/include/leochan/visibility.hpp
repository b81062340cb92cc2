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

#ifndef LEOCHAN_VISIBILITY_HPP
#define LEOCHAN_VISIBILITY_HPP

#include "leochan/geometry.hpp"

#include <vector>

namespace leochan
{

// Length of the part of latitude line phi that lies within central angle sigma of the user.
double arc_length(double user_polar_rad, double phi, double sigma);
double arc_length(const UserGeometry &user, double phi, double sigma);

// d(arc_length)/d(cos sigma); zero where the line is fully inside or outside the cap.
double arc_length_derivative(double user_polar_rad, double phi, double sigma);

class CapModel
{
public:
    CapModel(const ShellConfig &shell, const UserGeometry &user, double quadrature_tol = 1e-9);

    const ShellConfig &shell() const { return shell_; }
    const UserGeometry &user() const { return user_; }
    double quadrature_tol() const { return tol_; }

    // Probability that one satellite lies within central angle sigma of the user.
    double p_cap(double sigma) const;
    // Derivative of p_cap with respect to cos(sigma); negative inside the support.
    double p_cap_prime(double sigma) const;

    double p_sat() const { return p_sat_; }
    double availability() const { return availability_; }
    double avg_visible() const;
    double visible_count_pmf(int n) const;

    double sigma_min() const { return user_.sigma_min_rad; }
    double sigma_max() const { return user_.sigma_max_rad; }
    double gain_min() const { return g_min_; }
    double gain_max() const { return g_max_; }
    double delay_min_s() const { return tau_min_; }
    double delay_max_s() const { return tau_max_; }

    // Panel edges in argument of latitude omega in [-pi/2, pi/2] at which the arc
    // length for any of the given cap angles changes its functional form.
    std::vector<double> omega_breakpoints(const std::vector<double> &sigmas) const;

    // Arc length as a function of omega (polar angle phi(omega)).
    double arc_length_at_omega(double omega, double sigma) const;

private:
    ShellConfig shell_;
    UserGeometry user_;
    double tol_;
    double p_sat_ = 0.0;
    double availability_ = 0.0;
    double g_min_ = 0.0, g_max_ = 0.0;
    double tau_min_ = 0.0, tau_max_ = 0.0;
};

} // namespace leochan

#endif
