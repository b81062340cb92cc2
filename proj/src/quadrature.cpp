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

#include "leochan/quadrature.hpp"

#include "leochan/errors.hpp"
#include "leochan/geometry.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace leochan
{

namespace bq = boost::math::quadrature;

double integrate_tanh_sinh(const std::function<double(double)> &f, double a, double b, double rel_tol)
{
    if (!(b > a))
        return 0.0;
    thread_local bq::tanh_sinh<double> integrator(15);
    return integrator.integrate(f, a, b, rel_tol);
}

double integrate_adaptive(const std::function<double(double)> &f, double a, double b, double rel_tol,
                          unsigned max_depth)
{
    if (!(b > a))
        return 0.0;
    double err = 0.0;
    const double tol = std::max(rel_tol, 1e-14);
    return bq::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, tol, &err);
}

double integrate_panels(const std::function<double(double)> &f, const std::vector<double> &edges, double rel_tol)
{
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        sum += integrate_tanh_sinh(f, edges[i], edges[i + 1], rel_tol);
    return sum;
}

namespace
{

template <unsigned N>
void append_gauss(std::vector<QuadratureNode> &out, double a, double b)
{
    using rule = bq::gauss<double, N>;
    const auto &xs = rule::abscissa();
    const auto &ws = rule::weights();
    const double width = b - a;
    auto push = [&](double t, double w) {
        // u in [0, 1] -> a + width * (u - sin(2 pi u) / (2 pi)), dx/du = width * (1 - cos(2 pi u))
        const double u = 0.5 * (t + 1.0);
        const double x = a + width * (u - std::sin(two_pi * u) / two_pi);
        out.push_back({x, 0.5 * w * width * (1.0 - std::cos(two_pi * u))});
    };
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        if (xs[i] == 0.0)
            push(0.0, ws[i]);
        else
        {
            push(-xs[i], ws[i]);
            push(xs[i], ws[i]);
        }
    }
}

} // namespace

std::vector<QuadratureNode> sidi_gauss_rule(double a, double b, unsigned order)
{
    std::vector<QuadratureNode> out;
    out.reserve(order);
    switch (order)
    {
    case 7:
        append_gauss<7>(out, a, b);
        break;
    case 10:
        append_gauss<10>(out, a, b);
        break;
    case 15:
        append_gauss<15>(out, a, b);
        break;
    case 20:
        append_gauss<20>(out, a, b);
        break;
    default:
        throw DomainError("unsupported Gauss-Legendre order " + std::to_string(order));
    }
    return out;
}

unsigned thread_count()
{
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    if (const char *env = std::getenv("LEO_CHANNEL_THREADS"))
    {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0)
            return static_cast<unsigned>(v);
    }
    return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body)
{
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (std::size_t i = next++; i < n; i = next++)
        {
            try
            {
                body(i);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t)
        pool.emplace_back(run);
    run();
    for (auto &th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace leochan
