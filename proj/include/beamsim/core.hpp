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

#ifndef BEAMSIM_CORE_HPP
#define BEAMSIM_CORE_HPP

#include <vector>

namespace beamsim
{
    inline constexpr double speed_of_light = 299792458.0; // m/s, exact by definition
    inline constexpr double pi = 3.141592653589793238462643383279502884;

    // Exact distance from a point at polar (r, theta) to a point displaced by
    // `offset` along the array axis: sqrt(r^2 + offset^2 - 2 offset r sin(theta)).
    // All element/sub-array distances go through this one helper so that
    // different callers produce bit-identical values for identical inputs.
    double radial_distance(double r, double sin_theta, double offset);

    // Uniform linear array along the y-axis, centered at the origin.
    // Element n sits at lateral offset (n - (N-1)/2) * d.
    class ArrayGeometry
    {
    public:
        ArrayGeometry(int n_antennas, double carrier_freq_hz, double spacing_m);

        // Spacing d = lambda_c / 2, the usual choice.
        static ArrayGeometry half_wavelength(int n_antennas, double carrier_freq_hz);

        int n_antennas() const { return n_; }
        double carrier_freq() const { return carrier_freq_; }
        double spacing() const { return spacing_; }

        double wavelength() const { return speed_of_light / carrier_freq_; }
        double aperture() const { return (n_ - 1) * spacing_; } // exact (N-1) d
        double center_wavenumber() const { return 2.0 * pi * carrier_freq_ / speed_of_light; }

        // Lateral offset of element n from the array center, in meters.
        // Computed from the closed form, not by accumulation.
        double offset(int n) const;

    private:
        int n_ = 0;
        double carrier_freq_ = 0.0;
        double spacing_ = 0.0;
    };

    // OFDM grid of M subcarriers spanning [f_c - B/2, f_c + B/2].
    class OfdmGrid
    {
    public:
        OfdmGrid(int n_subcarriers, double bandwidth_hz, double center_freq_hz);

        int n_subcarriers() const { return m_; }
        double bandwidth() const { return bandwidth_; }
        double center_freq() const { return center_freq_; }

        // f_m = f_c + (B/2) (2m/(M-1) - 1); a single-subcarrier grid sits at f_c.
        double freq(int m) const;
        double wavenumber(int m) const { return 2.0 * pi * freq(m) / speed_of_light; }

        // eta_m = f_m / f_c and eps_m = eta_m - 1.
        double eta(int m) const { return freq(m) / center_freq_; }
        double eps(int m) const { return eta(m) - 1.0; }

        // 2m/(M-1) - 1, the +-1 normalized frequency offset (0 when M = 1).
        double eps_normalized(int m) const;
        double max_abs_eps() const { return bandwidth_ / (2.0 * center_freq_); }

    private:
        int m_ = 0;
        double bandwidth_ = 0.0;
        double center_freq_ = 0.0;
    };

    // User position in the array plane, polar coordinates about the array
    // center. theta is measured from broadside (the x-axis), so x = r cos(theta)
    // is strictly positive by construction.
    struct Location
    {
        double r = 0.0;     // meters
        double theta = 0.0; // radians, |theta| < pi/2

        Location(double r_m, double theta_rad);

        double x() const;
        double y() const;
    };

    // Split of an N-element array into K adjacent sub-arrays of P elements each
    // (N = K * P exactly). Sub-array k is centered at lateral offset
    // (k - (K-1)/2) * P * d.
    class SubArrayPartition
    {
    public:
        SubArrayPartition(ArrayGeometry geometry, int n_subarrays);

        const ArrayGeometry& geometry() const { return geometry_; }
        int n_subarrays() const { return k_; }                                 // K
        int antennas_per_subarray() const { return geometry_.n_antennas() / k_; } // P

        // Lateral offset of the center of sub-array k.
        double center_offset(int k) const;
        // Lateral offset of element p within its sub-array.
        double element_offset(int p) const;

    private:
        ArrayGeometry geometry_;
        int k_ = 0;
    };

    // Distance and direction from one sub-array center to the user.
    struct SubArrayView
    {
        double r = 0.0;         // meters, > 0
        double sin_theta = 0.0; // in [-1, 1]
    };

    // Per-element lateral offsets, anti-symmetric about the array center.
    std::vector<double> antenna_offsets(const ArrayGeometry& geometry);

    // All M subcarrier frequencies of the grid.
    std::vector<double> subcarrier_freqs(const OfdmGrid& grid);

    // (r_k, sin theta_k) for every sub-array as seen from the user location.
    std::vector<SubArrayView> subarray_geometry(const SubArrayPartition& partition,
                                                const Location& location);

} // namespace beamsim

#endif
