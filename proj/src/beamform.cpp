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

#include "beamsim/beamform.hpp"

#include <algorithm>
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
    } // namespace

    WeightVector narrowband_focus(const ArrayGeometry& geometry, const Location& location)
    {
        const ArrayResponse response =
            near_field_response(geometry, location, geometry.carrier_freq());

        WeightVector weights;
        weights.freq = response.freq;
        weights.entries.resize(response.entries.size());
        std::transform(response.entries.begin(), response.entries.end(),
                       weights.entries.begin(),
                       [](const std::complex<double>& e) { return std::conj(e); });
        return weights;
    }

    WeightVector far_field_steer(const ArrayGeometry& geometry, double theta)
    {
        const ArrayResponse response =
            far_field_response(geometry, theta, geometry.carrier_freq());

        WeightVector weights;
        weights.freq = response.freq;
        weights.entries.resize(response.entries.size());
        std::transform(response.entries.begin(), response.entries.end(),
                       weights.entries.begin(),
                       [](const std::complex<double>& e) { return std::conj(e); });
        return weights;
    }

    PdfWeights pdf_design(const SubArrayPartition& partition, const Location& location)
    {
        const std::vector<SubArrayView> views = subarray_geometry(partition, location);

        PdfWeights weights{partition, {}, {}, 0.0};
        weights.delay_distances.resize(views.size());
        weights.phase_slopes.resize(views.size());

        double max_r = 0.0;
        for (const SubArrayView& view : views)
            max_r = std::max(max_r, view.r);
        weights.global_distance = max_r;

        for (std::size_t k = 0; k < views.size(); ++k)
        {
            weights.delay_distances[k] = max_r - views[k].r;
            weights.phase_slopes[k] = -views[k].sin_theta;
        }
        return weights;
    }

    PdfWeights far_field_dpp_design(const SubArrayPartition& partition, double theta)
    {
        const int n_sub = partition.n_subarrays();
        const double sin_theta = std::sin(theta);

        PdfWeights weights{partition, {}, {}, 0.0};
        weights.delay_distances.resize(n_sub);
        weights.phase_slopes.resize(n_sub);

        double min_raw = 0.0;
        for (int k = 0; k < n_sub; ++k)
            min_raw = std::min(min_raw, partition.center_offset(k) * sin_theta);
        weights.global_distance = -min_raw; // max(0, -min) since min_raw <= 0

        for (int k = 0; k < n_sub; ++k)
        {
            weights.delay_distances[k] =
                weights.global_distance + partition.center_offset(k) * sin_theta;
            weights.phase_slopes[k] = -sin_theta;
        }
        return weights;
    }

    WeightVector pdf_expand(const PdfWeights& weights, double freq_hz)
    {
        if (!(freq_hz > 0.0))
            throw std::invalid_argument("pdf_expand: frequency must be > 0");

        const SubArrayPartition& partition = weights.partition;
        const int n_sub = partition.n_subarrays();
        const int per_sub = partition.antennas_per_subarray();
        if (static_cast<int>(weights.delay_distances.size()) != n_sub ||
            static_cast<int>(weights.phase_slopes.size()) != n_sub)
            throw std::invalid_argument("pdf_expand: weight arrays do not match partition");

        const double k = 2.0 * pi * freq_hz / speed_of_light;
        const double scale = 1.0 / std::sqrt(static_cast<double>(partition.geometry().n_antennas()));

        WeightVector expanded;
        expanded.freq = freq_hz;
        expanded.entries.resize(partition.geometry().n_antennas());
        for (int sub = 0; sub < n_sub; ++sub)
        {
            const std::complex<double> delay = scale * cis(-k * weights.delay_distances[sub]);
            const double slope = pi * weights.phase_slopes[sub];
            for (int p = 0; p < per_sub; ++p)
            {
                const double delta_p = static_cast<double>(p) - 0.5 * (per_sub - 1);
                expanded.entries[sub * per_sub + p] = delay * cis(slope * delta_p);
            }
        }
        return expanded;
    }

} // namespace beamsim
