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

#ifndef BEAMSIM_RATE_HPP
#define BEAMSIM_RATE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "beamsim/core.hpp"

namespace beamsim
{
    // Per-subcarrier received SNR is held equal across the band by power
    // control, so rates depend on the normalized gains only.
    struct RateConfig
    {
        double snr_db = 0.0;
        OfdmGrid grid;
    };

    double db_to_linear(double db);

    // (1/M) sum_m log2(1 + snr G_m^2), bits/s/Hz.
    double average_rate(std::span<const double> gains_per_subcarrier, double snr_linear);

    // log2(1 + snr), the rate of a unit-gain band; an upper bound on
    // average_rate for any gain list.
    double ideal_rate(double snr_linear);

    // Counter-free splitmix64: a tiny, portable 64-bit generator. Uniform
    // doubles are built from the top 53 bits, so streams are bit-identical
    // across platforms (no implementation-defined std:: distributions).
    class SplitMix64
    {
    public:
        explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

        std::uint64_t next()
        {
            state_ += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = state_;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            return z ^ (z >> 31);
        }

        // Uniform in [0, 1).
        double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    private:
        std::uint64_t state_;
    };

    // Deterministic uniform draw of user locations: sample i uses its own
    // generator derived from (seed, i), so parallel evaluation cannot change
    // the sequence.
    std::vector<Location> sample_locations(double r_low, double r_high, double theta_low,
                                           double theta_high, int n_samples,
                                           std::uint64_t seed);

    // Per-subcarrier gains achieved at one sampled location.
    using GainSampler = std::function<std::vector<double>(const Location&)>;

    // Mean over sampled locations of the band-average rate.
    double monte_carlo_rate(const GainSampler& gains, double r_low, double r_high,
                            double theta_low, double theta_high, int n_samples,
                            std::uint64_t seed, double snr_linear);

} // namespace beamsim

#endif
