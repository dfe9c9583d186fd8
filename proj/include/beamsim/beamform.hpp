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

#ifndef BEAMSIM_BEAMFORM_HPP
#define BEAMSIM_BEAMFORM_HPP

#include <complex>
#include <vector>

#include "beamsim/channel.hpp"
#include "beamsim/core.hpp"

namespace beamsim
{
    // Analog weight vector for one frequency. Phase-shifter / time-delay
    // hardware is unit-modulus, so every entry has magnitude 1/sqrt(N).
    struct WeightVector
    {
        std::vector<std::complex<double>> entries;
        double freq = 0.0; // Hz
    };

    // Delay-phase weights for a partitioned array: one time delayer per
    // sub-array (expressed as an equivalent distance r_k' = c tau_k') feeding P
    // phase shifters with a per-sub-array phase slope beta_k'. Expanding at a
    // frequency f gives entry (k, p) =
    //   (1/sqrt(N)) exp(-j k_f r_k') exp(+j pi delta_P^(p) beta_k').
    struct PdfWeights
    {
        SubArrayPartition partition;
        std::vector<double> delay_distances; // r_k' in meters, all >= 0, min is 0
        std::vector<double> phase_slopes;    // beta_k', |beta_k'| <= 1
        double global_distance = 0.0;        // L in meters
    };

    // Classic near-field focusing with phase shifters only: the conjugate of
    // the spherical-wave response at the center frequency. Frequency-flat.
    WeightVector narrowband_focus(const ArrayGeometry& geometry, const Location& location);

    // Far-field steering with phase shifters only: the conjugate of the planar
    // steering vector at the center frequency. Frequency-flat.
    WeightVector far_field_steer(const ArrayGeometry& geometry, double theta);

    // Phase-delay focusing. The time delayers absorb the spherical phase
    // across sub-array centers (r_k' = L - r_k with L = max_k r_k, the minimal
    // choice keeping every delay non-negative) and the phase shifters match
    // each sub-array's local planar phase (beta_k' = -sin theta_k).
    PdfWeights pdf_design(const SubArrayPartition& partition, const Location& location);

    // Far-field delay-phase baseline: the limit of pdf_design as the user
    // distance grows at fixed direction. Delays compensate the linear
    // inter-sub-array phase only; no distance information is used.
    PdfWeights far_field_dpp_design(const SubArrayPartition& partition, double theta);

    // Materialize the delay-phase weights at one frequency.
    WeightVector pdf_expand(const PdfWeights& weights, double freq_hz);

} // namespace beamsim

#endif
