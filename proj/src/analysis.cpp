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

#include "beamsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace beamsim
{
    namespace
    {
        std::complex<double> cis(double phase)
        {
            return {std::cos(phase), std::sin(phase)};
        }

        // Focusing weights have r_k' + r_k constant over k and slopes matched
        // to the sub-array directions; the band-average reduction below is
        // only valid for them.
        void check_focusing_weights(const PdfWeights& weights,
                                    const std::vector<SubArrayView>& views)
        {
            const std::size_t n = views.size();
            if (weights.delay_distances.size() != n || weights.phase_slopes.size() != n)
                throw std::invalid_argument("avg_gain_exact: weights do not match partition");

            const double total0 = weights.delay_distances[0] + views[0].r;
            for (std::size_t k = 0; k < n; ++k)
            {
                const double total = weights.delay_distances[k] + views[k].r;
                if (std::abs(total - total0) > 1e-9 * std::max(1.0, std::abs(total0)))
                    throw std::invalid_argument(
                        "avg_gain_exact: weights lack focusing delays (r_k' + r_k varies)");
                if (std::abs(weights.phase_slopes[k] + views[k].sin_theta) > 1e-9)
                    throw std::invalid_argument(
                        "avg_gain_exact: phase slopes are not matched to the sub-arrays");
            }
        }
    } // namespace

    double gain(const ArrayResponse& response, const WeightVector& weights)
    {
        if (response.entries.size() != weights.entries.size())
            throw std::invalid_argument(
                "gain: response length " + std::to_string(response.entries.size()) +
                " != weight length " + std::to_string(weights.entries.size()));

        std::complex<double> acc = 0.0;
        for (std::size_t n = 0; n < response.entries.size(); ++n)
            acc += response.entries[n] * weights.entries[n];
        return std::abs(acc);
    }

    double dirichlet_sinc(int p, double x)
    {
        if (p < 1)
            throw std::invalid_argument("dirichlet_sinc: order must be >= 1");

        const double denom = std::sin(0.5 * pi * x);
        if (std::abs(denom) < 1e-12)
        {
            // x at an even integer 2q: the limit is (-1)^(q (P-1)).
            const long q = std::lround(0.5 * x);
            return (q * static_cast<long>(p - 1)) % 2 == 0 ? 1.0 : -1.0;
        }
        return std::sin(0.5 * pi * p * x) / (p * denom);
    }

    double pdf_gain_closed(const SubArrayPartition& partition, const Location& location,
                           const PdfWeights& weights, const OfdmGrid& grid, int m)
    {
        const std::vector<SubArrayView> views = subarray_geometry(partition, location);
        const int n_sub = partition.n_subarrays();
        const int per_sub = partition.antennas_per_subarray();
        if (static_cast<int>(weights.delay_distances.size()) != n_sub)
            throw std::invalid_argument("pdf_gain_closed: weights do not match partition");

        const double k_m = grid.wavenumber(m);
        const double eta = grid.eta(m);

        std::complex<double> acc = 0.0;
        for (int k = 0; k < n_sub; ++k)
        {
            const double xi =
                dirichlet_sinc(per_sub, weights.phase_slopes[k] + eta * views[k].sin_theta);
            acc += cis(-k_m * (weights.delay_distances[k] + views[k].r)) * xi;
        }
        return std::abs(acc) / n_sub;
    }

    double avg_gain_exact(const SubArrayPartition& partition, const Location& location,
                          const PdfWeights& weights, const OfdmGrid& grid)
    {
        const std::vector<SubArrayView> views = subarray_geometry(partition, location);
        check_focusing_weights(weights, views);

        const int n_sub = partition.n_subarrays();
        const int per_sub = partition.antennas_per_subarray();
        const int n_carriers = grid.n_subcarriers();

        double acc = 0.0;
        for (int m = 0; m < n_carriers; ++m)
        {
            const double eps = grid.eps(m);
            for (int k = 0; k < n_sub; ++k)
                acc += dirichlet_sinc(per_sub, eps * views[k].sin_theta);
        }
        return acc / (static_cast<double>(n_carriers) * n_sub);
    }

    double quadratic_sinc_fit(int p, double bandwidth_hz, double center_freq_hz, double a,
                              double b)
    {
        if (!(center_freq_hz > 0.0))
            throw std::invalid_argument("quadratic_sinc_fit: center frequency must be > 0");
        const double edge = bandwidth_hz / (2.0 * center_freq_hz);
        if (std::abs(a) > edge * (1.0 + 1e-12))
            throw std::invalid_argument("quadratic_sinc_fit: |a| must be <= B/(2 fc)");
        if (std::abs(b) > 1.0 + 1e-12)
            throw std::invalid_argument("quadratic_sinc_fit: |b| must be <= 1");

        if (edge == 0.0)
            return 1.0;
        const double u = a / edge;
        return 1.0 - (1.0 - dirichlet_sinc(p, edge)) * u * u * b * b;
    }

    double avg_gain_fit(const SubArrayPartition& partition, const Location& location,
                           const OfdmGrid& grid)
    {
        const int per_sub = partition.antennas_per_subarray();
        const double edge = grid.max_abs_eps();
        if (edge > 2.0 / per_sub)
            throw std::invalid_argument(
                "avg_gain_fit: band edge leaves the sub-array main lobe (|eps| > 2/P)");

        const std::vector<SubArrayView> views = subarray_geometry(partition, location);

        double sum_sin2 = 0.0;
        for (const SubArrayView& view : views)
            sum_sin2 += view.sin_theta * view.sin_theta;

        double sum_eps2 = 0.0; // sum of (eps_m / (B/2fc))^2, well-defined for B = 0 too
        for (int m = 0; m < grid.n_subcarriers(); ++m)
        {
            const double u = grid.eps_normalized(m);
            sum_eps2 += u * u;
        }

        const double loss = (1.0 - dirichlet_sinc(per_sub, edge)) /
                            (static_cast<double>(grid.n_subcarriers()) * partition.n_subarrays());
        return 1.0 - loss * sum_eps2 * sum_sin2;
    }

    double eps_sum_identity(int n_subcarriers)
    {
        if (n_subcarriers < 2)
            throw std::invalid_argument("eps_sum_identity: needs at least 2 subcarriers");
        const double m = n_subcarriers;
        return m * (m + 1.0) / (3.0 * (m - 1.0));
    }

    double xi_factor(double r, double theta, double aperture)
    {
        if (!(r > 0.0))
            throw std::invalid_argument("xi_factor: distance must be > 0");
        if (!(std::abs(theta) < pi / 2.0))
            throw std::invalid_argument("xi_factor: angle must satisfy |theta| < pi/2");
        if (!(aperture > 0.0))
            throw std::invalid_argument("xi_factor: aperture must be > 0");

        // atan2 merges the pi-indicator branch of the bracketed term and stays
        // continuous across r = D/2.
        const double rc = r * std::cos(theta);
        const double xi =
            1.0 - (rc / aperture) * std::atan2(aperture * rc, r * r - 0.25 * aperture * aperture);
        return std::clamp(xi, 0.0, 1.0);
    }

    double gamma_factor(double bandwidth_hz, double center_freq_hz, int p)
    {
        if (!(center_freq_hz > 0.0))
            throw std::invalid_argument("gamma_factor: center frequency must be > 0");
        if (bandwidth_hz < 0.0)
            throw std::invalid_argument("gamma_factor: bandwidth must be >= 0");
        return (1.0 - dirichlet_sinc(p, bandwidth_hz / (2.0 * center_freq_hz))) / 3.0;
    }

    double avg_gain_closed_form(double bandwidth_hz, double center_freq_hz, int p, double r,
                               double theta, double aperture)
    {
        return 1.0 - gamma_factor(bandwidth_hz, center_freq_hz, p) * xi_factor(r, theta, aperture);
    }

    GainMap gain_map(const ArrayGeometry& geometry, const WeightProvider& weights,
                     const OfdmGrid& grid, std::vector<double> distances,
                     std::vector<double> angles, std::vector<int> subcarriers)
    {
        if (distances.empty() || angles.empty() || subcarriers.empty())
            throw std::invalid_argument("gain_map: axes must be non-empty");
        for (int m : subcarriers)
            if (m < 0 || m >= grid.n_subcarriers())
                throw std::invalid_argument("gain_map: subcarrier index out of range");

        std::vector<WeightVector> expanded;
        expanded.reserve(subcarriers.size());
        for (int m : subcarriers)
            expanded.push_back(weights(grid.freq(m)));

        GainMap map;
        map.distances = std::move(distances);
        map.angles = std::move(angles);
        map.subcarriers = std::move(subcarriers);
        map.values.resize(map.distances.size() * map.angles.size() * map.subcarriers.size());

        std::size_t cell = 0;
        for (double r_hat : map.distances)
            for (double theta_hat : map.angles)
                for (std::size_t s = 0; s < map.subcarriers.size(); ++s)
                {
                    const ArrayResponse response = near_field_response(
                        geometry, r_hat, theta_hat, grid.freq(map.subcarriers[s]));
                    map.values[cell++] = gain(response, expanded[s]);
                }
        return map;
    }

} // namespace beamsim
