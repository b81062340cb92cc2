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

#ifndef LEOCHAN_LATITUDE_SCAN_HPP
#define LEOCHAN_LATITUDE_SCAN_HPP

#include "leochan/propagation.hpp"
#include "leochan/visibility.hpp"

#include <vector>

namespace leochan
{

// Splits the Doppler profile along an arc of one latitude line into monotone pieces,
// so that level sets {theta : V(theta) <= nu} can be measured with one root per piece.
class LatitudeScan
{
public:
    LatitudeScan(const LatitudeDoppler &doppler, double theta_lo, double theta_hi, int scan_points = 512);

    double theta_lo() const { return th_.front(); }
    double theta_hi() const { return th_.back(); }
    double min_hz() const { return min_; }
    double max_hz() const { return max_; }

    // Length of the part of the arc where the Doppler shift is at most nu.
    double measure_below(double nu_hz) const;

    // Appends every theta where V crosses one of the sorted levels.
    void append_crossings(const std::vector<double> &levels_hz, std::vector<double> &out) const;

private:
    struct Piece
    {
        std::size_t first;
        std::size_t last;
        bool increasing;
    };

    double root_in_piece(const Piece &p, double nu) const;

    const LatitudeDoppler *doppler_;
    std::vector<double> th_;
    std::vector<double> v_;
    std::vector<Piece> pieces_;
    double min_ = 0.0;
    double max_ = 0.0;
};

// Arc of latitude line phi inside the cap of angle sigma, centred on the user's azimuth.
// Returns false when the line misses the cap.
bool cap_arc(const UserGeometry &user, double phi, double sigma, double &theta_lo, double &theta_hi);

struct PartitionOptions
{
    int scan_points = 512;
    unsigned panel_order = 10;
    double max_panel_width = 3e-3; // radians of argument of latitude
};

// Probability mass (normalized by p_sat) of a delay-Doppler partition for one mark.
// Rows follow the central-angle edges, columns the Doppler edges; shifts outside the
// Doppler range fold into the first or last column. The result is row-major.
std::vector<double> partition_masses(const CapModel &model, Mark mark, const std::vector<double> &sigma_edges,
                                     const std::vector<double> &nu_edges_hz, const PartitionOptions &options = {});

} // namespace leochan

#endif
