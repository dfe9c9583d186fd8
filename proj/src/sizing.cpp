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

#include "beamsim/sizing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "beamsim/analysis.hpp"
#include "beamsim/rayleigh.hpp"

namespace beamsim
{
    SizingSpec::SizingSpec(ArrayGeometry geom, double bandwidth_hz, double rho_low_m,
                           double rho_high_m, double theta_high_rad,
                           double coherence_loss_delta, double min_avg_gain_delta)
        : geometry(geom), bandwidth(bandwidth_hz), rho_low(rho_low_m), rho_high(rho_high_m),
          theta_high(theta_high_rad), coherence_loss(coherence_loss_delta),
          min_avg_gain(min_avg_gain_delta)
    {
        if (bandwidth_hz < 0.0)
            throw std::invalid_argument("SizingSpec: bandwidth must be >= 0");
        if (!(rho_low_m > 0.0) || !(rho_low_m < rho_high_m))
            throw std::invalid_argument("SizingSpec: need 0 < rho_low < rho_high");
        if (!(theta_high_rad > 0.0) || !(theta_high_rad < pi / 2.0))
            throw std::invalid_argument("SizingSpec: sector half-width must lie in (0, pi/2)");
        if (!(coherence_loss_delta > 0.0) || !(coherence_loss_delta < 0.5))
            throw std::invalid_argument("SizingSpec: coherence loss must lie in (0, 0.5)");
        if (!(min_avg_gain_delta > 0.5) || !(min_avg_gain_delta < 1.0))
            throw std::invalid_argument("SizingSpec: gain threshold must lie in (0.5, 1)");
    }

    XiMax max_xi_over_range(double theta_high, double aperture, double rho_low,
                            double rho_high)
    {
        if (!(rho_low > 0.0) || rho_low > rho_high)
            throw std::invalid_argument("max_xi_over_range: need 0 < rho_low <= rho_high");
        if (rho_low == rho_high)
            return XiMax{rho_low, xi_factor(rho_low, theta_high, aperture)};

        // Dense log-spaced scan.
        constexpr int n_grid = 1000;
        const double log_lo = std::log(rho_low);
        const double log_hi = std::log(rho_high);
        int best = 0;
        double best_xi = -1.0;
        std::vector<double> grid(n_grid);
        for (int i = 0; i < n_grid; ++i)
        {
            grid[i] = std::exp(log_lo + (log_hi - log_lo) * i / (n_grid - 1));
            const double xi = xi_factor(grid[i], theta_high, aperture);
            if (xi > best_xi)
            {
                best_xi = xi;
                best = i;
            }
        }

        // Golden-section refinement around the best cell.
        double a = grid[std::max(0, best - 1)];
        double b = grid[std::min(n_grid - 1, best + 1)];
        const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = b - inv_phi * (b - a);
        double x2 = a + inv_phi * (b - a);
        double f1 = xi_factor(x1, theta_high, aperture);
        double f2 = xi_factor(x2, theta_high, aperture);
        while (b - a > 1e-6 * b)
        {
            if (f1 < f2)
            {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + inv_phi * (b - a);
                f2 = xi_factor(x2, theta_high, aperture);
            }
            else
            {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - inv_phi * (b - a);
                f1 = xi_factor(x1, theta_high, aperture);
            }
        }
        const double r_ref = 0.5 * (a + b);
        const double xi_ref = xi_factor(r_ref, theta_high, aperture);
        if (xi_ref >= best_xi)
            return XiMax{r_ref, xi_ref};
        return XiMax{grid[best], best_xi};
    }

    double solve_p_delta(double bandwidth_hz, double center_freq_hz, double min_avg_gain,
                         double xi_star)
    {
        if (!(center_freq_hz > 0.0))
            throw std::invalid_argument("solve_p_delta: center frequency must be > 0");
        if (!(xi_star > 0.0))
            throw std::invalid_argument("solve_p_delta: xi_star must be > 0");

        const double inf = std::numeric_limits<double>::infinity();
        if (bandwidth_hz <= 0.0)
            return inf; // no in-band roll-off at all

        const double target = 1.0 - 3.0 * (1.0 - min_avg_gain) / xi_star;
        if (target >= 1.0)
            throw std::invalid_argument("solve_p_delta: gain target outside the sinc range");
        if (target <= 0.0)
            return inf; // any sub-array size inside the main lobe meets the target

        // Xi_P(B/2fc) falls monotonically from 1 at P = 1 to 0 at P = 4fc/B,
        // so a crossing with target in (0, 1) always exists; bisect on real P.
        const double edge = bandwidth_hz / (2.0 * center_freq_hz);
        const auto xi_of = [edge](double p) {
            return std::sin(0.5 * pi * p * edge) / (p * std::sin(0.5 * pi * edge));
        };
        double lo = 1.0;
        double hi = 4.0 * center_freq_hz / bandwidth_hz;
        if (xi_of(lo) < target)
            throw std::runtime_error("solve_p_delta: no admissible sub-array size");
        while (hi - lo > 1e-3)
        {
            const double mid = 0.5 * (lo + hi);
            (xi_of(mid) >= target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

    SizingResult size_subarrays(const SizingSpec& spec)
    {
        const double inf = std::numeric_limits<double>::infinity();
        const int n_ant = spec.geometry.n_antennas();
        const double fc = spec.geometry.carrier_freq();
        const double lambda = spec.geometry.wavelength();
        // The geometry loss factor uses the full-array aperture in its N d form.
        const double aperture = n_ant * spec.geometry.spacing();

        SizingResult result;
        result.bound_wideband = spec.bandwidth > 0.0 ? 4.0 * fc / spec.bandwidth : inf;

        const double c_delta = solve_beta_delta(spec.coherence_loss).c_delta;
        result.bound_farfield = std::sqrt(2.0 * spec.rho_low / (c_delta * lambda));

        const XiMax xi = max_xi_over_range(spec.theta_high, aperture, spec.rho_low, spec.rho_high);
        result.max_xi = xi.xi;
        result.max_xi_r = xi.r;
        result.bound_gain = solve_p_delta(spec.bandwidth, fc, spec.min_avg_gain, xi.xi);

        const double cap =
            std::min({result.bound_wideband, result.bound_farfield, result.bound_gain});
        if (cap < 1.0)
            throw std::runtime_error("size_subarrays: array cannot satisfy constraints "
                                     "(every admissible sub-array size is below 1)");

        const int p_cap = static_cast<int>(std::min(cap, static_cast<double>(n_ant)));
        int chosen = 1;
        for (int p = 1; p <= p_cap; ++p)
            if (n_ant % p == 0)
                chosen = p;

        result.chosen_p = chosen;
        result.n_subarrays = n_ant / chosen;
        return result;
    }

} // namespace beamsim
