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

#ifndef BEAMSIM_SIZING_HPP
#define BEAMSIM_SIZING_HPP

#include "beamsim/core.hpp"

namespace beamsim
{
    // Inputs for choosing the sub-array size P (and so the time-delayer count
    // K = N / P): the service region, the coherence-loss threshold that
    // defines "far field of a sub-array", and the minimum acceptable
    // band-average gain.
    struct SizingSpec
    {
        ArrayGeometry geometry;
        double bandwidth = 0.0;      // Hz
        double rho_low = 0.0;        // nearest served distance (m)
        double rho_high = 0.0;       // cell radius (m)
        double theta_high = 0.0;     // sector half-width (rad)
        double coherence_loss = 0.0; // Delta in (0, 0.5)
        double min_avg_gain = 0.0;   // delta in (0.5, 1)

        SizingSpec(ArrayGeometry geometry, double bandwidth_hz, double rho_low_m,
                   double rho_high_m, double theta_high_rad, double coherence_loss_delta,
                   double min_avg_gain_delta);
    };

    struct SizingResult
    {
        double bound_wideband = 0.0; // 4 fc / B
        double bound_farfield = 0.0; // sqrt(2 rho_l / (C_Delta lambda_c))
        double bound_gain = 0.0;     // P_delta (may be +inf when slack)
        int chosen_p = 0;            // largest divisor of N within all bounds
        int n_subarrays = 0;         // K = N / chosen_p
        double max_xi = 0.0;         // worst-case geometry loss factor over the region
        double max_xi_r = 0.0;       // distance attaining it (m)
    };

    struct XiMax
    {
        double r = 0.0;
        double xi = 0.0;
    };

    // Worst-case xi over the service region. The loss grows with |theta|, so
    // the sector edge is scanned: dense log-spaced grid plus golden-section
    // refinement around the best cell.
    XiMax max_xi_over_range(double theta_high, double aperture, double rho_low,
                            double rho_high);

    // Largest (continuous) P whose in-band Dirichlet-sinc roll-off still meets
    // the average-gain target: Xi_P(B/2fc) = 1 - 3(1 - delta)/xi_star. Returns
    // +inf when the target is slack over the whole admissible range.
    double solve_p_delta(double bandwidth_hz, double center_freq_hz, double min_avg_gain,
                         double xi_star);

    SizingResult size_subarrays(const SizingSpec& spec);

} // namespace beamsim

#endif
