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

#include "beamsim/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace beamsim
{

    double radial_distance(double r, double sin_theta, double offset)
    {
        return std::sqrt(r * r + offset * offset - 2.0 * offset * r * sin_theta);
    }

    ArrayGeometry::ArrayGeometry(int n_antennas, double carrier_freq_hz, double spacing_m)
        : n_(n_antennas), carrier_freq_(carrier_freq_hz), spacing_(spacing_m)
    {
        if (n_antennas < 1)
            throw std::invalid_argument("ArrayGeometry: antenna count must be >= 1, got " +
                                        std::to_string(n_antennas));
        if (!(carrier_freq_hz > 0.0))
            throw std::invalid_argument("ArrayGeometry: carrier frequency must be > 0");
        if (!(spacing_m > 0.0))
            throw std::invalid_argument("ArrayGeometry: antenna spacing must be > 0");
    }

    ArrayGeometry ArrayGeometry::half_wavelength(int n_antennas, double carrier_freq_hz)
    {
        if (!(carrier_freq_hz > 0.0))
            throw std::invalid_argument("ArrayGeometry: carrier frequency must be > 0");
        return ArrayGeometry(n_antennas, carrier_freq_hz,
                             0.5 * speed_of_light / carrier_freq_hz);
    }

    double ArrayGeometry::offset(int n) const
    {
        if (n < 0 || n >= n_)
            throw std::invalid_argument("ArrayGeometry: element index out of range");
        return (static_cast<double>(n) - 0.5 * (n_ - 1)) * spacing_;
    }

    OfdmGrid::OfdmGrid(int n_subcarriers, double bandwidth_hz, double center_freq_hz)
        : m_(n_subcarriers), bandwidth_(bandwidth_hz), center_freq_(center_freq_hz)
    {
        if (n_subcarriers < 1)
            throw std::invalid_argument("OfdmGrid: subcarrier count must be >= 1");
        if (bandwidth_hz < 0.0)
            throw std::invalid_argument("OfdmGrid: bandwidth must be >= 0");
        if (!(center_freq_hz > 0.0))
            throw std::invalid_argument("OfdmGrid: center frequency must be > 0");
        if (m_ > 1 && !(center_freq_hz - bandwidth_hz / 2.0 > 0.0))
            throw std::invalid_argument("OfdmGrid: lowest subcarrier frequency must be > 0");
    }

    double OfdmGrid::freq(int m) const
    {
        return center_freq_ + 0.5 * bandwidth_ * eps_normalized(m);
    }

    double OfdmGrid::eps_normalized(int m) const
    {
        if (m < 0 || m >= m_)
            throw std::invalid_argument("OfdmGrid: subcarrier index out of range");
        if (m_ == 1)
            return 0.0;
        return 2.0 * static_cast<double>(m) / (m_ - 1) - 1.0;
    }

    Location::Location(double r_m, double theta_rad) : r(r_m), theta(theta_rad)
    {
        if (!(r_m > 0.0))
            throw std::invalid_argument("Location: distance must be > 0");
        if (!(std::abs(theta_rad) < pi / 2.0))
            throw std::invalid_argument("Location: angle must satisfy |theta| < pi/2");
    }

    double Location::x() const { return r * std::cos(theta); }
    double Location::y() const { return r * std::sin(theta); }

    SubArrayPartition::SubArrayPartition(ArrayGeometry geometry, int n_subarrays)
        : geometry_(geometry), k_(n_subarrays)
    {
        if (n_subarrays < 1)
            throw std::invalid_argument("SubArrayPartition: sub-array count must be >= 1");
        if (geometry_.n_antennas() % n_subarrays != 0)
            throw std::invalid_argument(
                "SubArrayPartition: sub-array count " + std::to_string(n_subarrays) +
                " does not divide antenna count " + std::to_string(geometry_.n_antennas()));
    }

    double SubArrayPartition::center_offset(int k) const
    {
        if (k < 0 || k >= k_)
            throw std::invalid_argument("SubArrayPartition: sub-array index out of range");
        const double p = antennas_per_subarray();
        return (static_cast<double>(k) - 0.5 * (k_ - 1)) * p * geometry_.spacing();
    }

    double SubArrayPartition::element_offset(int p) const
    {
        const int np = antennas_per_subarray();
        if (p < 0 || p >= np)
            throw std::invalid_argument("SubArrayPartition: element index out of range");
        return (static_cast<double>(p) - 0.5 * (np - 1)) * geometry_.spacing();
    }

    std::vector<double> antenna_offsets(const ArrayGeometry& geometry)
    {
        std::vector<double> offsets(geometry.n_antennas());
        for (int n = 0; n < geometry.n_antennas(); ++n)
            offsets[n] = geometry.offset(n);
        return offsets;
    }

    std::vector<double> subcarrier_freqs(const OfdmGrid& grid)
    {
        std::vector<double> freqs(grid.n_subcarriers());
        for (int m = 0; m < grid.n_subcarriers(); ++m)
            freqs[m] = grid.freq(m);
        return freqs;
    }

    std::vector<SubArrayView> subarray_geometry(const SubArrayPartition& partition,
                                                const Location& location)
    {
        const double sin_theta = std::sin(location.theta);
        const double y = location.r * sin_theta;

        std::vector<SubArrayView> views(partition.n_subarrays());
        for (int k = 0; k < partition.n_subarrays(); ++k)
        {
            const double offset = partition.center_offset(k);
            const double rk = radial_distance(location.r, sin_theta, offset);
            if (!(rk > 0.0))
                throw std::invalid_argument(
                    "subarray_geometry: user coincides with the center of sub-array " +
                    std::to_string(k));
            views[k] = SubArrayView{rk, (y - offset) / rk};
        }
        return views;
    }

} // namespace beamsim
