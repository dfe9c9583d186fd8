// SPDX-License-Identifier: Apache-2.0
//
// beamsim - near-field wideband OFDM beamforming simulation library
// Copyright (C) 2026 beamsim contributors
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

#include "beamsim/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace beamsim
{
    namespace
    {
        std::complex<double> cis(double phase)
        {
            return {std::cos(phase), std::sin(phase)};
        }

        void check_freq(double freq_hz)
        {
            if (!(freq_hz > 0.0))
                throw std::invalid_argument("channel: frequency must be > 0");
        }
    } // namespace

    double element_distance(const ArrayGeometry& geometry, const Location& location, int n)
    {
        return radial_distance(location.r, std::sin(location.theta), geometry.offset(n));
    }

    ArrayResponse near_field_response(const ArrayGeometry& geometry, const Location& location,
                                      double freq_hz)
    {
        return near_field_response(geometry, location.r, location.theta, freq_hz);
    }

    ArrayResponse near_field_response(const ArrayGeometry& geometry, double r, double theta,
                                      double freq_hz)
    {
        check_freq(freq_hz);
        if (!(r > 0.0))
            throw std::invalid_argument("near_field_response: distance must be > 0");

        const int n_ant = geometry.n_antennas();
        const double k = 2.0 * pi * freq_hz / speed_of_light;
        const double sin_theta = std::sin(theta);
        const double scale = 1.0 / std::sqrt(static_cast<double>(n_ant));

        ArrayResponse response;
        response.freq = freq_hz;
        response.entries.resize(n_ant);
        for (int n = 0; n < n_ant; ++n)
        {
            const double dist = radial_distance(r, sin_theta, geometry.offset(n));
            response.entries[n] = scale * cis(-k * dist);
        }
        return response;
    }

    ArrayResponse far_field_response(const ArrayGeometry& geometry, double theta,
                                     double freq_hz)
    {
        check_freq(freq_hz);

        const int n_ant = geometry.n_antennas();
        const double k = 2.0 * pi * freq_hz / speed_of_light;
        const double sin_theta = std::sin(theta);
        const double scale = 1.0 / std::sqrt(static_cast<double>(n_ant));

        ArrayResponse response;
        response.freq = freq_hz;
        response.entries.resize(n_ant);
        for (int n = 0; n < n_ant; ++n)
            response.entries[n] = scale * cis(k * geometry.offset(n) * sin_theta);
        return response;
    }

    PathGain path_gain(double freq_hz, double distance_m)
    {
        check_freq(freq_hz);
        if (!(distance_m > 0.0))
            throw std::invalid_argument("path_gain: distance must be > 0");
        return PathGain{speed_of_light / (4.0 * pi * freq_hz * distance_m), freq_hz};
    }

    ArrayResponse piecewise_response(const SubArrayPartition& partition,
                                     const Location& location, double freq_hz)
    {
        check_freq(freq_hz);

        const ArrayGeometry& geometry = partition.geometry();
        const int n_ant = geometry.n_antennas();
        const int n_sub = partition.n_subarrays();
        const int per_sub = partition.antennas_per_subarray();
        const double k = 2.0 * pi * freq_hz / speed_of_light;
        const double eta = freq_hz / geometry.carrier_freq();
        const double scale = 1.0 / std::sqrt(static_cast<double>(n_ant));

        const std::vector<SubArrayView> views = subarray_geometry(partition, location);

        ArrayResponse response;
        response.freq = freq_hz;
        response.entries.resize(n_ant);
        for (int sub = 0; sub < n_sub; ++sub)
        {
            const std::complex<double> inter = scale * cis(-k * views[sub].r);
            const double slope = pi * eta * views[sub].sin_theta;
            for (int p = 0; p < per_sub; ++p)
            {
                const double delta_p = static_cast<double>(p) - 0.5 * (per_sub - 1);
                response.entries[sub * per_sub + p] = inter * cis(slope * delta_p);
            }
        }
        return response;
    }

} // namespace beamsim
