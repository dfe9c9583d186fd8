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

#ifndef BEAMSIM_ANALYSIS_HPP
#define BEAMSIM_ANALYSIS_HPP

#include <functional>
#include <vector>

#include "beamsim/beamform.hpp"
#include "beamsim/channel.hpp"
#include "beamsim/core.hpp"

namespace beamsim
{
    // Normalized beamforming gain |sum_n a_n w_n| in [0, 1]. The response is a
    // row vector and the weights a column vector; no conjugation happens here
    // (beamformers are already conjugated designs).
    double gain(const ArrayResponse& response, const WeightVector& weights);

    // Dirichlet sinc sin(P pi x / 2) / (P sin(pi x / 2)), the normalized array
    // factor of a P-element uniform array. Removable singularities at even
    // integer x are resolved by their limits.
    double dirichlet_sinc(int p, double x);

    // Closed-form per-subcarrier gain of delay-phase weights under the
    // piecewise-planar channel:
    //   (1/K) |sum_k exp(-j k_m (r_k' + r_k)) Xi_P(beta_k' + eta_m sin theta_k)|.
    double pdf_gain_closed(const SubArrayPartition& partition, const Location& location,
                           const PdfWeights& weights, const OfdmGrid& grid, int m);

    // Band-average gain of focusing delay-phase weights under the
    // piecewise-planar channel, by direct summation:
    //   (1/(MK)) sum_m sum_k Xi_P(eps_m sin theta_k).
    // Requires weights with focusing delays (r_k' + r_k constant over k) and
    // matched phase slopes (beta_k' = -sin theta_k).
    double avg_gain_exact(const SubArrayPartition& partition, const Location& location,
                          const PdfWeights& weights, const OfdmGrid& grid);

    // Two-variable quadratic fit of Xi_P(a b) anchored at the origin and the
    // four band-edge corners:
    //   1 - (1 - Xi_P(B/2fc)) (a / (B/2fc))^2 b^2.
    double quadratic_sinc_fit(int p, double bandwidth_hz, double center_freq_hz, double a,
                              double b);

    // Band-average gain via the quadratic fit (valid while every subcarrier
    // stays inside the main lobe, |eps_m| <= 2/P).
    double avg_gain_fit(const SubArrayPartition& partition, const Location& location,
                           const OfdmGrid& grid);

    // sum_m (2m/(M-1) - 1)^2 = M(M+1)/(3(M-1)) for M >= 2.
    double eps_sum_identity(int n_subcarriers);

    // Geometry loss factor: the large-K closed form of (1/K) sum_k sin^2 theta_k,
    //   1 - (r cos theta / D) atan2(D r cos theta, r^2 - D^2/4),
    // continuous across r = D/2 and tending to sin^2 theta as r grows.
    double xi_factor(double r, double theta, double aperture);

    // Wideband loss factor (1 - Xi_P(B/2fc)) / 3.
    double gamma_factor(double bandwidth_hz, double center_freq_hz, int p);

    // Fully closed-form band-average gain: 1 - gamma * xi.
    double avg_gain_closed_form(double bandwidth_hz, double center_freq_hz, int p, double r,
                               double theta, double aperture);

    // Dense gain evaluation over a scan grid, values stored row-major over
    // (distance, angle, subcarrier).
    struct GainMap
    {
        std::vector<double> distances;  // scan distances r-hat (m)
        std::vector<double> angles;     // scan angles theta-hat (rad)
        std::vector<int> subcarriers;   // subcarrier indices into the grid
        std::vector<double> values;

        double at(std::size_t i_dist, std::size_t i_angle, std::size_t i_sub) const
        {
            return values[(i_dist * angles.size() + i_angle) * subcarriers.size() + i_sub];
        }
    };

    // Produces the weight vector to score at a given frequency.
    using WeightProvider = std::function<WeightVector(double freq_hz)>;

    GainMap gain_map(const ArrayGeometry& geometry, const WeightProvider& weights,
                     const OfdmGrid& grid, std::vector<double> distances,
                     std::vector<double> angles, std::vector<int> subcarriers);

} // namespace beamsim

#endif
