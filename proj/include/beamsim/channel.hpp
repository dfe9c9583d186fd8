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

#ifndef BEAMSIM_CHANNEL_HPP
#define BEAMSIM_CHANNEL_HPP

#include <complex>
#include <vector>

#include "beamsim/core.hpp"

namespace beamsim
{
    // Normalized array response at one frequency. Every entry has magnitude
    // 1/sqrt(N), so the vector is unit-norm. Propagation phase convention is
    // exp(-j k r) throughout the library; beamformers apply the conjugate.
    struct ArrayResponse
    {
        std::vector<std::complex<double>> entries;
        double freq = 0.0; // Hz
    };

    // Free-space path loss magnitude c / (4 pi f r), taken at the distance from
    // the array center (a single scalar per link, not per element).
    struct PathGain
    {
        double magnitude = 0.0;
        double freq = 0.0; // Hz
    };

    // Distance from element n to the user (exact, spherical wavefront).
    double element_distance(const ArrayGeometry& geometry, const Location& location, int n);

    // Spherical-wave response: entry n = (1/sqrt(N)) exp(-j k r^(n)).
    ArrayResponse near_field_response(const ArrayGeometry& geometry, const Location& location,
                                      double freq_hz);

    // Field-point overload for evaluating beam patterns over a scan grid. The
    // scan may include the array axis itself (|theta| = pi/2), which Location
    // deliberately excludes for user positions.
    ArrayResponse near_field_response(const ArrayGeometry& geometry, double r, double theta,
                                      double freq_hz);

    // Planar-wave steering vector: entry n = (1/sqrt(N)) exp(+j k offset_n sin theta).
    // The distance-dependent common phase exp(-j k r) is dropped; the vector
    // depends on direction only.
    ArrayResponse far_field_response(const ArrayGeometry& geometry, double theta,
                                     double freq_hz);

    PathGain path_gain(double freq_hz, double distance_m);

    // Piecewise-planar approximation of the spherical-wave response: the phase
    // across sub-array centers stays exact (spherical) while the phase inside
    // each sub-array is linearized about the sub-array's own direction.
    // Entry (k, p) = (1/sqrt(N)) exp(-j k_m r_k) exp(+j pi eta_m delta_P^(p) sin theta_k)
    // with eta_m = f / f_c, laid out sub-array-major.
    ArrayResponse piecewise_response(const SubArrayPartition& partition,
                                     const Location& location, double freq_hz);

} // namespace beamsim

#endif
