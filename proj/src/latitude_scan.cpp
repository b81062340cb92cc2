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

#include "leochan/latitude_scan.hpp"

#include "leochan/nbpp.hpp"
#include "leochan/quadrature.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace leochan
{

LatitudeScan::LatitudeScan(const LatitudeDoppler &doppler, double theta_lo, double theta_hi, int scan_points)
    : doppler_(&doppler)
{
    const int n = std::max(scan_points, 3);
    std::vector<double> ts(n), vs(n);
    const double step = (theta_hi - theta_lo) / (n - 1);
    for (int k = 0; k < n; ++k)
    {
        ts[k] = k + 1 == n ? theta_hi : theta_lo + k * step;
        vs[k] = doppler.hz(ts[k]);
    }

    th_.reserve(n + 8);
    v_.reserve(n + 8);
    th_.push_back(ts[0]);
    v_.push_back(vs[0]);
    std::vector<std::size_t> cuts{0};
    for (int k = 1; k + 1 < n; ++k)
    {
        const double d1 = vs[k] - vs[k - 1];
        const double d2 = vs[k + 1] - vs[k];
        const bool is_max = d1 > 0.0 && d2 <= 0.0;
        const bool is_min = d1 < 0.0 && d2 >= 0.0;
        if (is_max || is_min)
        {
            const double s = is_max ? -1.0 : 1.0;
            auto obj = [&](double t) { return s * doppler.hz(t); };
            const auto best = boost::math::tools::brent_find_minima(obj, ts[k - 1], ts[k + 1], 50);
            const double te = best.first;
            const double ve = s * best.second;
            if (te < ts[k])
            {
                th_.push_back(te);
                v_.push_back(ve);
                cuts.push_back(th_.size() - 1);
                th_.push_back(ts[k]);
                v_.push_back(vs[k]);
            }
            else
            {
                th_.push_back(ts[k]);
                v_.push_back(vs[k]);
                th_.push_back(te);
                v_.push_back(ve);
                cuts.push_back(th_.size() - 1);
            }
            continue;
        }
        th_.push_back(ts[k]);
        v_.push_back(vs[k]);
    }
    th_.push_back(ts[n - 1]);
    v_.push_back(vs[n - 1]);
    cuts.push_back(th_.size() - 1);

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    {
        const std::size_t a = cuts[i], b = cuts[i + 1];
        if (b > a)
            pieces_.push_back({a, b, v_[b] >= v_[a]});
    }
    // Samples adjacent to a refined extremum can overshoot it by rounding; keep pieces monotone.
    for (const auto &p : pieces_)
    {
        for (std::size_t j = p.first + 1; j <= p.last; ++j)
        {
            if (p.increasing)
                v_[j] = std::max(v_[j], v_[j - 1]);
            else
                v_[j] = std::min(v_[j], v_[j - 1]);
        }
    }
    const auto [mn, mx] = std::minmax_element(v_.begin(), v_.end());
    min_ = *mn;
    max_ = *mx;
}

double LatitudeScan::root_in_piece(const Piece &p, double nu) const
{
    // Bracket from the monotone samples, then polish.
    std::size_t lo = p.first, hi = p.last;
    while (hi - lo > 1)
    {
        const std::size_t mid = (lo + hi) / 2;
        const bool below = p.increasing ? v_[mid] <= nu : v_[mid] > nu;
        if (below)
            lo = mid;
        else
            hi = mid;
    }
    auto f = [&](double t) { return doppler_->hz(t) - nu; };
    double a = th_[lo], b = th_[hi];
    double fa = f(a), fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if ((fa < 0.0) == (fb < 0.0))
        return std::abs(fa) < std::abs(fb) ? a : b;
    std::uintmax_t iters = 100;
    auto tol = [](double x, double y) { return std::abs(x - y) <= 1e-12; };
    const auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
    return 0.5 * (r.first + r.second);
}

double LatitudeScan::measure_below(double nu) const
{
    double total = 0.0;
    for (const auto &p : pieces_)
    {
        const double t0 = th_[p.first], t1 = th_[p.last];
        const double v0 = v_[p.first], v1 = v_[p.last];
        const double lo = std::min(v0, v1), hi = std::max(v0, v1);
        if (nu >= hi)
            total += t1 - t0;
        else if (nu >= lo)
        {
            const double r = root_in_piece(p, nu);
            total += p.increasing ? r - t0 : t1 - r;
        }
    }
    return total;
}

void LatitudeScan::append_crossings(const std::vector<double> &levels, std::vector<double> &out) const
{
    for (const auto &p : pieces_)
    {
        const double lo = std::min(v_[p.first], v_[p.last]);
        const double hi = std::max(v_[p.first], v_[p.last]);
        auto it = std::upper_bound(levels.begin(), levels.end(), lo);
        for (; it != levels.end() && *it < hi; ++it)
            out.push_back(root_in_piece(p, *it));
    }
}

bool cap_arc(const UserGeometry &user, double phi, double sigma, double &theta_lo, double &theta_hi)
{
    const double len = arc_length(user.user_polar_rad, phi, sigma);
    if (len <= 0.0)
        return false;
    theta_lo = UserGeometry::user_azimuth_rad - 0.5 * len;
    theta_hi = UserGeometry::user_azimuth_rad + 0.5 * len;
    return true;
}

std::vector<double> partition_masses(const CapModel &model, Mark mark, const std::vector<double> &sigma_edges,
                                     const std::vector<double> &nu_edges, const PartitionOptions &options)
{
    const std::size_t rows = sigma_edges.size() - 1;
    const std::size_t cols = nu_edges.size() - 1;
    const ShellConfig &shell = model.shell();
    const UserGeometry &user = model.user();
    const double sigma_last = sigma_edges.back();
    const double phi_u = user.user_polar_rad;
    const double norm = 1.0 / (2.0 * pi * pi * model.p_sat());

    // Outer rule in omega, with panel edges at every tangency of a row boundary.
    std::vector<double> panels = model.omega_breakpoints(sigma_edges);
    std::vector<QuadratureNode> nodes;
    for (std::size_t i = 0; i + 1 < panels.size(); ++i)
    {
        const double a = panels[i], b = panels[i + 1];
        const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / options.max_panel_width)));
        for (int k = 0; k < pieces; ++k)
        {
            const auto rule =
                sidi_gauss_rule(a + (b - a) * k / pieces, k + 1 == pieces ? b : a + (b - a) * (k + 1) / pieces,
                                options.panel_order);
            nodes.insert(nodes.end(), rule.begin(), rule.end());
        }
    }

    // Fixed chunking keeps the floating-point summation order independent of the thread count.
    const std::size_t n_chunks = std::min<std::size_t>(64, nodes.size());
    std::vector<std::vector<double>> partial(n_chunks, std::vector<double>(rows * cols, 0.0));
    const std::vector<double> inner_levels(nu_edges.begin() + 1, nu_edges.end() - 1);

    parallel_for(n_chunks, [&](std::size_t chunk) {
        std::vector<double> &acc = partial[chunk];
        std::vector<double> cuts;
        const std::size_t begin = nodes.size() * chunk / n_chunks;
        const std::size_t end = nodes.size() * (chunk + 1) / n_chunks;
        for (std::size_t q = begin; q < end; ++q)
        {
            const double phi = phi_from_omega(shell, nodes[q].x);
            double lo = 0.0, hi = 0.0;
            if (!cap_arc(user, phi, sigma_last, lo, hi))
                continue;
            const LatitudeDoppler line(shell, phi_u, phi, mark);
            const LatitudeScan scan(line, lo, hi, options.scan_points);

            cuts.clear();
            cuts.push_back(lo);
            cuts.push_back(hi);
            for (std::size_t i = 0; i + 1 < sigma_edges.size(); ++i)
            {
                const double len = arc_length(phi_u, phi, sigma_edges[i]);
                if (len > 0.0 && len < two_pi)
                {
                    cuts.push_back(UserGeometry::user_azimuth_rad - 0.5 * len);
                    cuts.push_back(UserGeometry::user_azimuth_rad + 0.5 * len);
                }
            }
            scan.append_crossings(inner_levels, cuts);
            std::sort(cuts.begin(), cuts.end());

            const double weight = nodes[q].w * norm;
            for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
            {
                const double len = cuts[k + 1] - cuts[k];
                if (len <= 0.0)
                    continue;
                const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
                const double sigma = std::acos(clamp_unit(cos_central_angle(phi_u, mid, phi)));
                const auto rit = std::upper_bound(sigma_edges.begin(), sigma_edges.end(), sigma);
                std::size_t row = rit == sigma_edges.begin() ? 0 : static_cast<std::size_t>(rit - sigma_edges.begin()) - 1;
                row = std::min(row, rows - 1);
                const double v = line.hz(mid);
                const auto cit = std::upper_bound(nu_edges.begin(), nu_edges.end(), v);
                std::size_t col = cit == nu_edges.begin() ? 0 : static_cast<std::size_t>(cit - nu_edges.begin()) - 1;
                col = std::min(col, cols - 1);
                acc[row * cols + col] += weight * len;
            }
        }
    });

    std::vector<double> mass(rows * cols, 0.0);
    for (const auto &part : partial)
        for (std::size_t i = 0; i < mass.size(); ++i)
            mass[i] += part[i];
    return mass;
}

} // namespace leochan
