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

#include "beamsim/rate.hpp"

#include <cmath>
#include <stdexcept>

namespace beamsim
{
    double db_to_linear(double db)
    {
        return std::pow(10.0, db / 10.0);
    }

    double average_rate(std::span<const double> gains_per_subcarrier, double snr_linear)
    {
        if (gains_per_subcarrier.empty())
            throw std::invalid_argument("average_rate: gain list must be non-empty");
        if (snr_linear < 0.0)
            throw std::invalid_argument("average_rate: SNR must be >= 0");

        double acc = 0.0;
        for (double g : gains_per_subcarrier)
            acc += std::log2(1.0 + snr_linear * g * g);
        return acc / static_cast<double>(gains_per_subcarrier.size());
    }

    double ideal_rate(double snr_linear)
    {
        if (snr_linear < 0.0)
            throw std::invalid_argument("ideal_rate: SNR must be >= 0");
        return std::log2(1.0 + snr_linear);
    }

    std::vector<Location> sample_locations(double r_low, double r_high, double theta_low,
                                           double theta_high, int n_samples,
                                           std::uint64_t seed)
    {
        if (n_samples < 1)
            throw std::invalid_argument("sample_locations: need at least one sample");
        if (!(r_low > 0.0) || r_low > r_high)
            throw std::invalid_argument("sample_locations: need 0 < r_low <= r_high");
        if (theta_low > theta_high || !(std::abs(theta_low) < pi / 2.0) ||
            !(std::abs(theta_high) < pi / 2.0))
            throw std::invalid_argument(
                "sample_locations: need theta_low <= theta_high within (-pi/2, pi/2)");

        std::vector<Location> locations;
        locations.reserve(n_samples);
        for (int i = 0; i < n_samples; ++i)
        {
            SplitMix64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1));
            const double r = r_low + (r_high - r_low) * rng.next_unit();
            const double theta = theta_low + (theta_high - theta_low) * rng.next_unit();
            locations.emplace_back(r, theta);
        }
        return locations;
    }

    double monte_carlo_rate(const GainSampler& gains, double r_low, double r_high,
                            double theta_low, double theta_high, int n_samples,
                            std::uint64_t seed, double snr_linear)
    {
        const std::vector<Location> locations =
            sample_locations(r_low, r_high, theta_low, theta_high, n_samples, seed);

        double acc = 0.0;
        for (const Location& loc : locations)
            acc += average_rate(gains(loc), snr_linear);
        return acc / static_cast<double>(locations.size());
    }

} // namespace beamsim
