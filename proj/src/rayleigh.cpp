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

#include "beamsim/rayleigh.hpp"

#include <cmath>
#include <stdexcept>

#include "beamsim/analysis.hpp"
#include "beamsim/beamform.hpp"
#include "beamsim/channel.hpp"

namespace beamsim
{
    namespace
    {
        std::complex<double> integrand(double t)
        {
            const double phase = -0.5 * pi * t * t;
            return {std::cos(phase), std::sin(phase)};
        }

        // Adaptive Simpson with Richardson acceptance, recursing until the
        // local error estimate fits the remaining tolerance budget.
        std::complex<double> adaptive_simpson(double a, double b, std::complex<double> fa,
                                              std::complex<double> fm, std::complex<double> fb,
                                              std::complex<double> whole, double tol, int depth)
        {
            const double mid = 0.5 * (a + b);
            const std::complex<double> fam = integrand(0.5 * (a + mid));
            const std::complex<double> fmb = integrand(0.5 * (mid + b));
            const std::complex<double> left = (mid - a) / 6.0 * (fa + 4.0 * fam + fm);
            const std::complex<double> right = (b - mid) / 6.0 * (fm + 4.0 * fmb + fb);
            const std::complex<double> sum = left + right;
            if (depth <= 0 || std::abs(sum - whole) <= 15.0 * tol)
                return sum + (sum - whole) / 15.0;
            return adaptive_simpson(a, mid, fa, fam, fm, left, 0.5 * tol, depth - 1) +
                   adaptive_simpson(mid, b, fm, fmb, fb, right, 0.5 * tol, depth - 1);
        }
    } // namespace

    FresnelKernel::FresnelKernel(double abs_tol) : abs_tol_(abs_tol)
    {
        if (!(abs_tol > 0.0))
            throw std::invalid_argument("FresnelKernel: tolerance must be > 0");
    }

    std::complex<double> FresnelKernel::integral(double beta) const
    {
        if (beta < 0.0)
            throw std::invalid_argument("FresnelKernel: beta must be >= 0");
        if (beta == 0.0)
            return 0.0;

        // Split into panels of bounded phase sweep so the adaptive pass starts
        // from a sane estimate even for large beta.
        const int panels = std::max(1, static_cast<int>(std::ceil(beta / 0.5)));
        std::complex<double> total = 0.0;
        for (int i = 0; i < panels; ++i)
        {
            const double a = beta * i / panels;
            const double b = beta * (i + 1) / panels;
            const std::complex<double> fa = integrand(a);
            const std::complex<double> fm = integrand(0.5 * (a + b));
            const std::complex<double> fb = integrand(b);
            const std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
            total += adaptive_simpson(a, b, fa, fm, fb, whole, abs_tol_ / panels, 40);
        }
        return total;
    }

    double FresnelKernel::g(double beta) const
    {
        if (beta < 0.0)
            throw std::invalid_argument("FresnelKernel: beta must be >= 0");
        if (beta == 0.0)
            return 1.0; // integrand tends to 1 at the origin
        return std::abs(integral(beta)) / beta;
    }

    double classical_rayleigh(double aperture, double wavelength)
    {
        if (!(aperture > 0.0) || !(wavelength > 0.0))
            throw std::invalid_argument("classical_rayleigh: aperture and wavelength must be > 0");
        return 2.0 * aperture * aperture / wavelength;
    }

    double max_phase_error(double aperture, double wavelength, double r)
    {
        if (!(aperture > 0.0) || !(wavelength > 0.0))
            throw std::invalid_argument("max_phase_error: aperture and wavelength must be > 0");
        if (!(r > 0.0))
            throw std::invalid_argument("max_phase_error: distance must be > 0");
        return aperture * aperture * pi / (4.0 * r * wavelength);
    }

    double coherence(const ArrayGeometry& geometry, const Location& location)
    {
        const ArrayResponse response =
            near_field_response(geometry, location, geometry.carrier_freq());
        const WeightVector steer = far_field_steer(geometry, location.theta);
        return gain(response, steer);
    }

    double fresnel_g(double beta)
    {
        static const FresnelKernel kernel(1e-8);
        return kernel.g(beta);
    }

    BetaDelta solve_beta_delta(double delta)
    {
        if (!(delta > 0.0) || !(delta < 0.5))
            throw std::invalid_argument("solve_beta_delta: delta must lie in (0, 0.5)");

        static const FresnelKernel kernel(1e-10);
        const double target = 1.0 - delta;

        double lo = 1e-6, hi = 3.0;
        if (kernel.g(lo) < target || kernel.g(hi) > target)
            throw std::runtime_error("solve_beta_delta: no root in bracket (0, 3]");

        // G is decreasing over the bracket; bisect, then polish with Newton.
        for (int i = 0; i < 60; ++i)
        {
            const double mid = 0.5 * (lo + hi);
            (kernel.g(mid) >= target ? lo : hi) = mid;
        }
        double beta = 0.5 * (lo + hi);
        for (int i = 0; i < 8; ++i)
        {
            const std::complex<double> f = kernel.integral(beta);
            const double mag = std::abs(f);
            const double g = mag / beta;
            if (std::abs(g - target) <= 1e-9)
                break;
            // d|F|/dbeta = Re(conj(F) F') / |F| with F'(beta) = exp(-j pi beta^2 / 2)
            const double dmag =
                (std::conj(f) * integrand(beta)).real() / mag;
            const double dg = (dmag * beta - mag) / (beta * beta);
            const double step = (g - target) / dg;
            const double next = beta - step;
            if (!(next > 0.0) || next < lo || next > hi)
                break; // keep the bisection value if Newton leaves the bracket
            beta = next;
        }
        return BetaDelta{beta, 1.0 / (4.0 * beta * beta)};
    }

    double effective_rayleigh(double aperture, double wavelength, double theta, double delta)
    {
        const double cos_theta = std::cos(theta);
        return solve_beta_delta(delta).c_delta * cos_theta * cos_theta *
               classical_rayleigh(aperture, wavelength);
    }

} // namespace beamsim
