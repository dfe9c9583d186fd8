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

#ifndef BEAMSIM_RAYLEIGH_HPP
#define BEAMSIM_RAYLEIGH_HPP

#include <complex>

#include "beamsim/core.hpp"

namespace beamsim
{
    // Parameter-free Fresnel kernel G(beta) = |int_0^beta exp(-j pi t^2 / 2) dt| / beta,
    // evaluated by adaptive quadrature on the complex integrand. G(0) = 1 and G
    // decays as the quadratic phase winds up.
    class FresnelKernel
    {
    public:
        explicit FresnelKernel(double abs_tol = 1e-8);

        double abs_tol() const { return abs_tol_; }

        // int_0^beta exp(-j pi t^2 / 2) dt
        std::complex<double> integral(double beta) const;

        double g(double beta) const;

    private:
        double abs_tol_ = 1e-8;
    };

    // Classical far-field boundary 2 D^2 / lambda (max phase error pi/8).
    double classical_rayleigh(double aperture, double wavelength);

    // Largest planar-vs-spherical phase error over the array: D^2 pi / (4 r lambda).
    double max_phase_error(double aperture, double wavelength, double r);

    // Normalized coherence between the spherical-wave channel and its planar
    // approximation at the carrier, by the exact N-term sum. Equals the gain a
    // far-field-steered beam achieves on a user at `location`.
    double coherence(const ArrayGeometry& geometry, const Location& location);

    // G(beta) through a shared default kernel (absolute error <= 1e-8).
    double fresnel_g(double beta);

    struct BetaDelta
    {
        double beta = 0.0;    // solution of G(beta) = 1 - delta
        double c_delta = 0.0; // 1 / (4 beta^2)
    };

    // Solve G(beta) = 1 - delta on (0, 3] for a gain-loss threshold
    // delta in (0, 0.5): bisection bracket plus Newton polish.
    BetaDelta solve_beta_delta(double delta);

    // Distance below which far-field beamforming loses more than `delta` of
    // its gain: C_delta cos^2(theta) 2 D^2 / lambda.
    double effective_rayleigh(double aperture, double wavelength, double theta, double delta);

} // namespace beamsim

#endif
