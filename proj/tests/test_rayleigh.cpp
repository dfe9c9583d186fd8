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

#include <doctest.h>

#include <cmath>
#include <complex>

#include "beamsim/rayleigh.hpp"

using namespace beamsim;

namespace
{
    // Independent quadrature oracle: composite 16-point Gauss-Legendre with
    // fixed fine panels, no shared code with the adaptive kernel.
    std::complex<double> gl_integral(double beta)
    {
        static const double nodes[8] = {0.0950125098376374, 0.2816035507792589,
                                        0.4580167776572274, 0.6178762444026438,
                                        0.7554044083550030, 0.8656312023878318,
                                        0.9445750230732326, 0.9894009349916499};
        static const double weights[8] = {0.1894506104550685, 0.1826034150449236,
                                          0.1691565193950025, 0.1495959888165767,
                                          0.1246289712555339, 0.0951585116824928,
                                          0.0622535239386479, 0.0271524594117541};
        const int panels = 200;
        std::complex<double> total = 0.0;
        for (int i = 0; i < panels; ++i)
        {
            const double a = beta * i / panels;
            const double b = beta * (i + 1) / panels;
            const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            for (int q = 0; q < 8; ++q)
                for (double sign : {-1.0, 1.0})
                {
                    const double t = mid + sign * half * nodes[q];
                    const double phase = -0.5 * pi * t * t;
                    total += weights[q] * half *
                             std::complex<double>(std::cos(phase), std::sin(phase));
                }
        }
        return total;
    }
} // namespace

TEST_CASE("classical boundary: worked values and quadratic scaling")
{
    CHECK(classical_rayleigh(0.384, 0.003) == doctest::Approx(98.304).epsilon(1e-12));
    // 512 half-wavelength elements at 100 GHz span 0.768 m
    CHECK(classical_rayleigh(0.768, 0.003) == doctest::Approx(393.2).epsilon(0.02));
    CHECK(classical_rayleigh(2.0, 0.003) ==
          doctest::Approx(4.0 * classical_rayleigh(1.0, 0.003)).epsilon(1e-12));
    CHECK_THROWS_AS(classical_rayleigh(0.0, 0.003), std::invalid_argument);
}

TEST_CASE("max phase error: pi/8 at the boundary, decays with distance")
{
    const double aperture = 0.384, lambda = 0.003;
    const double boundary = classical_rayleigh(aperture, lambda);
    CHECK(max_phase_error(aperture, lambda, boundary) ==
          doctest::Approx(pi / 8).epsilon(1e-12));
    CHECK(max_phase_error(aperture, lambda, boundary / 2) ==
          doctest::Approx(pi / 4).epsilon(1e-12));
    CHECK(max_phase_error(aperture, lambda, 1e9) < 1e-7);
}

TEST_CASE("coherence: far-field and grazing limits, value at the classical boundary")
{
    const ArrayGeometry geom = ArrayGeometry::half_wavelength(256, 100e9);
    const double aperture = 256 * geom.spacing();
    const double boundary = classical_rayleigh(aperture, geom.wavelength());

    CHECK(coherence(geom, Location(1e6 * boundary, 0.3)) >= 1.0 - 1e-3);
    CHECK(coherence(geom, Location(5.0, pi / 2 - 1e-4)) >= 1.0 - 1e-3);

    // only ~0.7% loss right at the classical boundary: it overestimates the
    // region where planar beamforming actually hurts
    const double at_boundary = coherence(geom, Location(boundary, 0.0));
    CHECK(at_boundary == doctest::Approx(0.993).epsilon(0.002));

    // exact-sum oracle, written out independently
    const double k = geom.center_wavenumber();
    std::complex<double> acc = 0.0;
    for (int n = 0; n < 256; ++n)
    {
        const double offset = geom.offset(n);
        const double dist = std::sqrt(boundary * boundary + offset * offset);
        const double phase = -k * (dist - boundary);
        acc += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    CHECK(at_boundary == doctest::Approx(std::abs(acc) / 256.0).epsilon(1e-10));
}

TEST_CASE("fresnel kernel: limits, frozen values, quadrature cross-check")
{
    CHECK(fresnel_g(0.0) == 1.0);
    CHECK(fresnel_g(1e-8) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fresnel_g(0.8257) == doctest::Approx(0.95).epsilon(0.0011));
    CHECK_THROWS_AS(fresnel_g(-0.1), std::invalid_argument);

    for (double beta : {0.3, 0.8257, 1.4, 2.0, 3.0})
    {
        const double oracle = std::abs(gl_integral(beta)) / beta;
        CHECK(std::abs(fresnel_g(beta) - oracle) <= 1e-8);
    }
}

TEST_CASE("fresnel kernel decays strictly over the main descent")
{
    double previous = fresnel_g(1e-3);
    for (int i = 2; i <= 1500; ++i)
    {
        const double value = fresnel_g(i * 1e-3);
        CHECK(value < previous);
        previous = value;
    }
}

TEST_CASE("loss-threshold solve: worked constants and bisection oracle")
{
    const BetaDelta five = solve_beta_delta(0.05);
    CHECK(five.beta == doctest::Approx(0.8257).epsilon(0.0013));
    CHECK(five.c_delta == doctest::Approx(0.367).epsilon(0.0055));
    CHECK(std::abs(fresnel_g(five.beta) - 0.95) <= 1e-9);

    // small thresholds follow the quartic law G(beta) ~ 1 - pi^2 beta^4 / 90
    const BetaDelta tiny = solve_beta_delta(1e-4);
    CHECK(tiny.beta == doctest::Approx(std::pow(90.0 * 1e-4 / (pi * pi), 0.25)).epsilon(1e-3));
    CHECK(solve_beta_delta(1e-5).beta < tiny.beta);

    // plain-bisection oracle for a different threshold
    const double target = 0.90;
    double lo = 1e-6, hi = 3.0;
    for (int i = 0; i < 40; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        (fresnel_g(mid) >= target ? lo : hi) = mid;
    }
    const BetaDelta ten = solve_beta_delta(0.10);
    CHECK(ten.beta == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-6));

    CHECK_THROWS_AS(solve_beta_delta(0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_beta_delta(0.6), std::invalid_argument);
}

TEST_CASE("effective boundary: worked values and angular collapse")
{
    CHECK(effective_rayleigh(0.384, 0.003, pi / 8, 0.05) == doctest::Approx(31.0).epsilon(0.033));
    CHECK(effective_rayleigh(0.384, 0.003, 0.0, 0.05) ==
          doctest::Approx(0.367 * 98.304).epsilon(0.006));
    CHECK(effective_rayleigh(0.384, 0.003, pi / 2, 0.05) < 1e-10);
}

TEST_CASE("planar beamforming keeps its promised gain beyond the effective boundary")
{
    for (int n_ant : {128, 256})
    {
        const ArrayGeometry geom = ArrayGeometry::half_wavelength(n_ant, 100e9);
        const double aperture = n_ant * geom.spacing();
        for (double delta : {0.02, 0.05, 0.10})
            for (double theta : {0.0, pi / 8, pi / 4, pi / 3})
            {
                const double boundary =
                    effective_rayleigh(aperture, geom.wavelength(), theta, delta);
                for (double factor : {1.0, 1.5, 2.0, 5.0, 20.0})
                {
                    const double mu = coherence(geom, Location(boundary * factor, theta));
                    CHECK(mu >= 1.0 - delta - 0.005);
                }
            }
    }
}

TEST_CASE("discrete coherence tracks the Fresnel kernel")
{
    for (int n_ant : {128, 256})
    {
        const ArrayGeometry geom = ArrayGeometry::half_wavelength(n_ant, 100e9);
        const double aperture = n_ant * geom.spacing();
        for (double theta : {0.0, pi / 8, pi / 4})
            for (double r = 2.0; r <= 200.0; r *= 1.6)
            {
                const double beta = std::sqrt(aperture * aperture * std::cos(theta) *
                                              std::cos(theta) /
                                              (2.0 * geom.wavelength() * r));
                CHECK(std::abs(coherence(geom, Location(r, theta)) - fresnel_g(beta)) <=
                      0.01);
            }
    }
}
