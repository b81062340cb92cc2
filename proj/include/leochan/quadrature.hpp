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

#ifndef LEOCHAN_QUADRATURE_HPP
#define LEOCHAN_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace leochan
{

// Double-exponential rule on a finite interval; integrable endpoint singularities are fine.
double integrate_tanh_sinh(const std::function<double(double)> &f, double a, double b, double rel_tol);

// Adaptive Gauss-Kronrod (15 points) for integrands with kinks but no singularities.
double integrate_adaptive(const std::function<double(double)> &f, double a, double b, double rel_tol,
                          unsigned max_depth = 15);

// Sum of integrals over consecutive panels [edges[i], edges[i+1]].
double integrate_panels(const std::function<double(double)> &f, const std::vector<double> &edges, double rel_tol);

struct QuadratureNode
{
    double x;
    double w;
};

// Gauss-Legendre nodes after the sin^2 (Sidi) endpoint map, which clusters nodes at
// both ends and suppresses square-root endpoint behaviour. order in {7, 10, 15, 20}.
std::vector<QuadratureNode> sidi_gauss_rule(double a, double b, unsigned order);

// Worker count: LEO_CHANNEL_THREADS if set and positive, else the hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, n). Each index must write only its own output slots,
// which keeps the result independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

} // namespace leochan

#endif
