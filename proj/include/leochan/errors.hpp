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

#ifndef LEOCHAN_ERRORS_HPP
#define LEOCHAN_ERRORS_HPP

#include <stdexcept>

namespace leochan
{

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// The user's visible cap does not intersect the constellation's inclination band.
class NoVisibleSatellites : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Inconsistent or malformed configuration.
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Grid resolution too coarse for the requested statistics.
class ResolutionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace leochan

#endif
