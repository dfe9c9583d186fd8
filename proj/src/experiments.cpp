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

#include "beamsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "beamsim/analysis.hpp"
#include "beamsim/beamform.hpp"
#include "beamsim/channel.hpp"
#include "beamsim/rate.hpp"
#include "beamsim/rayleigh.hpp"
#include "beamsim/sizing.hpp"

namespace beamsim
{
    namespace
    {
        double deg2rad(double deg) { return deg * pi / 180.0; }

        std::vector<double> linspace(double lo, double hi, int n)
        {
            std::vector<double> values(n);
            for (int i = 0; i < n; ++i)
                values[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
            return values;
        }

        double mean(const std::vector<double>& v)
        {
            double acc = 0.0;
            for (double x : v)
                acc += x;
            return acc / v.size();
        }

        // Resolved configuration echoed into the CSV metadata block.
        class Resolved
        {
        public:
            void add(const std::string& key, const std::string& value)
            {
                lines_.push_back(key + " = " + value);
            }
            void add(const std::string& key, double value) { add(key, format_value(value)); }
            void add(const std::string& key, int value) { add(key, std::to_string(value)); }
            void add(const std::string& key, std::uint64_t value)
            {
                add(key, std::to_string(value));
            }
            std::vector<std::string> lines() const { return lines_; }

        private:
            std::vector<std::string> lines_;
        };

        // Defaults form the reference desk configuration: 256 antennas at
        // half-wavelength spacing, 100 GHz carrier, 5 GHz band with 256
        // subcarriers, 32-antenna sub-arrays.

        double parse_carrier(const KeyValueConfig& params, Resolved& resolved)
        {
            const double carrier = params.get_double("carrier_freq_hz", 100e9);
            if (!(carrier > 0.0))
                throw ConfigError("field 'carrier_freq_hz': must be > 0");
            resolved.add("carrier_freq_hz", carrier);
            return carrier;
        }

        double parse_spacing(const KeyValueConfig& params, double carrier, Resolved& resolved)
        {
            const double spacing =
                params.get_double("antenna_spacing_m", 0.5 * speed_of_light / carrier);
            if (!(spacing > 0.0))
                throw ConfigError("field 'antenna_spacing_m': must be > 0");
            resolved.add("antenna_spacing_m", spacing);
            return spacing;
        }

        int parse_n_antennas(const KeyValueConfig& params, Resolved& resolved)
        {
            const int n = params.get_int("n_antennas", 256);
            if (n < 1)
                throw ConfigError("field 'n_antennas': must be >= 1");
            resolved.add("n_antennas", n);
            return n;
        }

        int parse_subarray_antennas(const KeyValueConfig& params, int n_antennas,
                                    Resolved& resolved)
        {
            const int p = params.get_int("subarray_antennas", 32);
            if (p < 1 || n_antennas % p != 0)
                throw ConfigError("field 'subarray_antennas': must divide n_antennas (" +
                                  std::to_string(n_antennas) + ")");
            resolved.add("subarray_antennas", p);
            return p;
        }

        OfdmGrid parse_grid(const KeyValueConfig& params, double carrier, Resolved& resolved)
        {
            const double bandwidth = params.get_double("bandwidth_hz", 5e9);
            const int n_subcarriers = params.get_int("n_subcarriers", 256);
            if (bandwidth < 0.0)
                throw ConfigError("field 'bandwidth_hz': must be >= 0");
            if (n_subcarriers > 1 && bandwidth >= 2.0 * carrier)
                throw ConfigError(
                    "field 'bandwidth_hz': band reaches zero frequency (needs B < 2 fc)");
            if (n_subcarriers < 1)
                throw ConfigError("field 'n_subcarriers': must be >= 1");
            resolved.add("bandwidth_hz", bandwidth);
            resolved.add("n_subcarriers", n_subcarriers);
            return OfdmGrid(n_subcarriers, bandwidth, carrier);
        }

        std::uint64_t parse_seed(const KeyValueConfig& params, Resolved& resolved)
        {
            const std::uint64_t seed = params.get_u64("seed", 1);
            resolved.add("seed", seed);
            resolved.add("rng", "splitmix64");
            return seed;
        }

        Location parse_location(const KeyValueConfig& params, double default_r,
                                double default_theta_deg, Resolved& resolved)
        {
            const double r = params.get_double("user_r_m", default_r);
            const double theta_deg = params.get_double("user_theta_deg", default_theta_deg);
            resolved.add("user_r_m", r);
            resolved.add("user_theta_deg", theta_deg);
            if (!(r > 0.0))
                throw ConfigError("field 'user_r_m': must be > 0");
            if (!(std::abs(theta_deg) < 90.0))
                throw ConfigError("field 'user_theta_deg': must satisfy |theta| < 90");
            return Location(r, deg2rad(theta_deg));
        }

        std::vector<BeamformerKind> parse_beamformers(const KeyValueConfig& params,
                                                      const std::vector<std::string>& fallback,
                                                      Resolved& resolved)
        {
            std::vector<std::string> names;
            if (params.has("beamformer"))
                names = {params.get_string("beamformer", "")};
            else
                names = params.get_list("beamformers", fallback);

            std::vector<BeamformerKind> kinds;
            std::string echo;
            for (const std::string& name : names)
            {
                kinds.push_back(beamformer_from_string(name));
                if (!echo.empty())
                    echo += ",";
                echo += to_string(kinds.back());
            }
            resolved.add("beamformers", echo);
            return kinds;
        }

        void check_known_keys(const ExperimentConfig& config,
                              const std::set<std::string>& allowed)
        {
            // `seed` is a global CLI override, accepted (and ignored) by the
            // deterministic experiments too
            static const std::set<std::string> always = {
                "carrier_freq_hz", "antenna_spacing_m", "output", "label", "seed"};
            for (const std::string& key : config.params.keys())
                if (!always.count(key) && !allowed.count(key))
                    throw ConfigError("unknown key '" + key + "' for experiment '" +
                                      config.name + "'");
        }

        // Weight vector for one beamformer at one frequency; the
        // frequency-flat families ignore the frequency.
        WeightProvider provider_for(BeamformerKind kind, const SubArrayPartition& partition,
                                    const Location& location)
        {
            switch (kind)
            {
            case BeamformerKind::narrowband:
            {
                WeightVector flat = narrowband_focus(partition.geometry(), location);
                return [flat](double freq) {
                    WeightVector w = flat;
                    w.freq = freq;
                    return w;
                };
            }
            case BeamformerKind::far_dpp:
            {
                PdfWeights weights = far_field_dpp_design(partition, location.theta);
                return [weights](double freq) { return pdf_expand(weights, freq); };
            }
            case BeamformerKind::pdf:
            default:
            {
                PdfWeights weights = pdf_design(partition, location);
                return [weights](double freq) { return pdf_expand(weights, freq); };
            }
            }
        }

        // Per-subcarrier gains of several beamformers on one location under
        // the exact spherical-wave channel; the response at each subcarrier is
        // shared across beamformers.
        std::vector<std::vector<double>> gains_by_kind(
            const std::vector<BeamformerKind>& kinds, const SubArrayPartition& partition,
            const Location& location, const OfdmGrid& grid)
        {
            std::vector<WeightProvider> providers;
            providers.reserve(kinds.size());
            for (BeamformerKind kind : kinds)
                providers.push_back(provider_for(kind, partition, location));

            std::vector<std::vector<double>> gains(
                kinds.size(), std::vector<double>(grid.n_subcarriers()));
            for (int m = 0; m < grid.n_subcarriers(); ++m)
            {
                const ArrayResponse response =
                    near_field_response(partition.geometry(), location, grid.freq(m));
                for (std::size_t b = 0; b < kinds.size(); ++b)
                    gains[b][m] = gain(response, providers[b](grid.freq(m)));
            }
            return gains;
        }

        std::vector<int> edge_center_edge(const OfdmGrid& grid)
        {
            const int last = grid.n_subcarriers() - 1;
            std::vector<int> picks = {0, last / 2, last};
            picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
            return picks;
        }

        const std::vector<std::string> freq_tags = {"f_low", "f_center", "f_high"};

        // ------------------------------------------------------------------
        // gain-map: scan (r-hat, theta-hat) at the band edges and center.
        ExperimentResult run_gain_map(const ExperimentConfig& config)
        {
            check_known_keys(config,
                             {"n_antennas", "subarray_antennas", "bandwidth_hz",
                              "n_subcarriers", "user_r_m", "user_theta_deg", "beamformer",
                              "beamformers", "rhat_min_m", "rhat_max_m", "rhat_points",
                              "theta_min_deg", "theta_max_deg", "theta_points"});

            Resolved resolved;
            resolved.add("experiment", config.name);
            const double carrier = parse_carrier(config.params, resolved);
            const double spacing = parse_spacing(config.params, carrier, resolved);
            const int n_antennas = parse_n_antennas(config.params, resolved);
            const int per_sub = parse_subarray_antennas(config.params, n_antennas, resolved);
            const OfdmGrid grid = parse_grid(config.params, carrier, resolved);
            const Location user = parse_location(config.params, 2.0, 22.5, resolved);
            const std::vector<BeamformerKind> kinds =
                parse_beamformers(config.params, {"pdf"}, resolved);

            const double r_lo = config.params.get_double("rhat_min_m", 0.5);
            const double r_hi = config.params.get_double("rhat_max_m", 20.0);
            const int r_pts = config.params.get_int("rhat_points", 40);
            const double t_lo = config.params.get_double("theta_min_deg", -90.0);
            const double t_hi = config.params.get_double("theta_max_deg", 90.0);
            const int t_pts = config.params.get_int("theta_points", 181);
            if (!(r_lo > 0.0) || r_hi < r_lo || r_pts < 1)
                throw ConfigError(
                    "field 'rhat_*': need 0 < rhat_min_m <= rhat_max_m, points >= 1");
            if (t_hi < t_lo || t_pts < 1 || t_lo < -90.0 || t_hi > 90.0)
                throw ConfigError(
                    "field 'theta_*': need -90 <= theta_min_deg <= theta_max_deg <= 90");
            resolved.add("rhat_min_m", r_lo);
            resolved.add("rhat_max_m", r_hi);
            resolved.add("rhat_points", r_pts);
            resolved.add("theta_min_deg", t_lo);
            resolved.add("theta_max_deg", t_hi);
            resolved.add("theta_points", t_pts);

            const ArrayGeometry geometry(n_antennas, carrier, spacing);
            const SubArrayPartition partition(geometry, n_antennas / per_sub);
            const std::vector<double> distances = linspace(r_lo, r_hi, r_pts);
            const std::vector<double> theta_deg = linspace(t_lo, t_hi, t_pts);
            std::vector<double> theta_rad(theta_deg.size());
            std::transform(theta_deg.begin(), theta_deg.end(), theta_rad.begin(), deg2rad);
            const std::vector<int> picks = edge_center_edge(grid);

            CsvResult csv;
            csv.n_axis_columns = 2;
            csv.columns = {"r_hat_m", "theta_hat_deg"};
            std::vector<GainMap> maps;
            for (BeamformerKind kind : kinds)
            {
                maps.push_back(gain_map(geometry, provider_for(kind, partition, user), grid,
                                        distances, theta_rad, picks));
                for (std::size_t s = 0; s < picks.size(); ++s)
                    csv.columns.push_back(to_string(kind) + "_gain_" + freq_tags[s]);
            }

            for (std::size_t i = 0; i < distances.size(); ++i)
                for (std::size_t j = 0; j < theta_deg.size(); ++j)
                {
                    std::vector<double> row = {distances[i], theta_deg[j]};
                    for (const GainMap& map : maps)
                        for (std::size_t s = 0; s < picks.size(); ++s)
                            row.push_back(map.at(i, j, s));
                    csv.rows.push_back(std::move(row));
                }

            std::ostringstream summary;
            for (std::size_t b = 0; b < kinds.size(); ++b)
                for (std::size_t s = 0; s < picks.size(); ++s)
                {
                    double best = -1.0;
                    std::size_t bi = 0, bj = 0;
                    for (std::size_t i = 0; i < distances.size(); ++i)
                        for (std::size_t j = 0; j < theta_deg.size(); ++j)
                            if (maps[b].at(i, j, s) > best)
                            {
                                best = maps[b].at(i, j, s);
                                bi = i;
                                bj = j;
                            }
                    summary << to_string(kinds[b]) << " " << freq_tags[s] << ": peak gain "
                            << format_value(best) << " at r = " << format_value(distances[bi])
                            << " m, theta = " << format_value(theta_deg[bj]) << " deg\n";
                }

            csv.metadata = resolved.lines();
            return {std::move(csv), summary.str()};
        }

        // ------------------------------------------------------------------
        // gain-vs-direction: angular cut through the user distance.
        ExperimentResult run_gain_vs_direction(const ExperimentConfig& config)
        {
            check_known_keys(config, {"n_antennas", "subarray_antennas", "bandwidth_hz",
                                      "n_subcarriers", "user_r_m", "user_theta_deg",
                                      "beamformer", "beamformers", "theta_min_deg",
                                      "theta_max_deg", "theta_step_deg"});

            Resolved resolved;
            resolved.add("experiment", config.name);
            const double carrier = parse_carrier(config.params, resolved);
            const double spacing = parse_spacing(config.params, carrier, resolved);
            const int n_antennas = parse_n_antennas(config.params, resolved);
            const int per_sub = parse_subarray_antennas(config.params, n_antennas, resolved);
            const OfdmGrid grid = parse_grid(config.params, carrier, resolved);
            const Location user = parse_location(config.params, 2.0, 22.5, resolved);
            const std::vector<BeamformerKind> kinds =
                parse_beamformers(config.params, {"narrowband", "pdf"}, resolved);

            const double t_lo = config.params.get_double("theta_min_deg", -90.0);
            const double t_hi = config.params.get_double("theta_max_deg", 90.0);
            const double t_step = config.params.get_double("theta_step_deg", 0.25);
            if (!(t_step > 0.0) || t_hi < t_lo || t_lo < -90.0 || t_hi > 90.0)
                throw ConfigError("field 'theta_*': need -90 <= min <= max <= 90 and step > 0");
            const int t_pts = static_cast<int>(std::floor((t_hi - t_lo) / t_step + 0.5)) + 1;
            resolved.add("theta_min_deg", t_lo);
            resolved.add("theta_max_deg", t_hi);
            resolved.add("theta_step_deg", t_step);

            const ArrayGeometry geometry(n_antennas, carrier, spacing);
            const SubArrayPartition partition(geometry, n_antennas / per_sub);
            std::vector<double> theta_deg(t_pts), theta_rad(t_pts);
            for (int j = 0; j < t_pts; ++j)
            {
                theta_deg[j] = t_lo + t_step * j;
                theta_rad[j] = deg2rad(theta_deg[j]);
            }
            const std::vector<int> picks = edge_center_edge(grid);

            CsvResult csv;
            csv.n_axis_columns = 1;
            csv.columns = {"theta_hat_deg"};
            std::vector<GainMap> maps;
            for (BeamformerKind kind : kinds)
            {
                maps.push_back(gain_map(geometry, provider_for(kind, partition, user), grid,
                                        {user.r}, theta_rad, picks));
                for (std::size_t s = 0; s < picks.size(); ++s)
                    csv.columns.push_back(to_string(kind) + "_gain_" + freq_tags[s]);
            }

            for (int j = 0; j < t_pts; ++j)
            {
                std::vector<double> row = {theta_deg[j]};
                for (const GainMap& map : maps)
                    for (std::size_t s = 0; s < picks.size(); ++s)
                        row.push_back(map.at(0, j, s));
                csv.rows.push_back(std::move(row));
            }

            std::ostringstream summary;
            for (std::size_t b = 0; b < kinds.size(); ++b)
            {
                const std::vector<std::vector<double>> gains =
                    gains_by_kind({kinds[b]}, partition, user, grid);
                summary << to_string(kinds[b]) << " on the user location: gain "
                        << format_value(gains[0][picks.front()]) << " / "
                        << format_value(gains[0][picks[picks.size() / 2]]) << " / "
                        << format_value(gains[0][picks.back()])
                        << " at f_low / f_center / f_high\n";
            }

            csv.metadata = resolved.lines();
            return {std::move(csv), summary.str()};
        }

        // ------------------------------------------------------------------
        // avg-gain-vs-theta: band-average gain across the sector.
        ExperimentResult run_avg_gain_vs_theta(const ExperimentConfig& config)
        {
            check_known_keys(config,
                             {"n_antennas", "subarray_antennas", "bandwidth_hz",
                              "n_subcarriers", "user_r_m", "theta_min_deg", "theta_max_deg",
                              "theta_points"});

            Resolved resolved;
            resolved.add("experiment", config.name);
            const double carrier = parse_carrier(config.params, resolved);
            const double spacing = parse_spacing(config.params, carrier, resolved);
            const int n_antennas = parse_n_antennas(config.params, resolved);
            const int per_sub = parse_subarray_antennas(config.params, n_antennas, resolved);
            const OfdmGrid grid = parse_grid(config.params, carrier, resolved);

            const double r = config.params.get_double("user_r_m", 10.0);
            const double t_lo = config.params.get_double("theta_min_deg", -60.0);
            const double t_hi = config.params.get_double("theta_max_deg", 60.0);
            const int t_pts = config.params.get_int("theta_points", 49);
            if (!(r > 0.0))
                throw ConfigError("field 'user_r_m': must be > 0");
            if (t_hi < t_lo || t_pts < 1 || !(std::abs(t_lo) < 90.0) ||
                !(std::abs(t_hi) < 90.0))
                throw ConfigError("field 'theta_*': need -90 < min <= max < 90");
            resolved.add("user_r_m", r);
            resolved.add("theta_min_deg", t_lo);
            resolved.add("theta_max_deg", t_hi);
            resolved.add("theta_points", t_pts);

            const ArrayGeometry geometry(n_antennas, carrier, spacing);
            const SubArrayPartition partition(geometry, n_antennas / per_sub);
            const double aperture = n_antennas * spacing;
            const std::vector<double> theta_deg = linspace(t_lo, t_hi, t_pts);

            CsvResult csv;
            csv.n_axis_columns = 1;
            csv.columns = {"theta_deg",           "pdf_avg_gain",    "pdf_piecewise_avg_gain",
                           "narrowband_avg_gain", "fit_avg_gain", "closed_form_avg_gain"};

            double min_pdf = 1.0, max_model_err = 0.0;
            for (double td : theta_deg)
            {
                const Location loc(r, deg2rad(td));
                const std::vector<std::vector<double>> gains = gains_by_kind(
                    {BeamformerKind::pdf, BeamformerKind::narrowband}, partition, loc, grid);
                const double pdf_avg = mean(gains[0]);
                const double piecewise =
                    avg_gain_exact(partition, loc, pdf_design(partition, loc), grid);
                const double fit = avg_gain_fit(partition, loc, grid);
                const double closed_form = avg_gain_closed_form(
                    grid.bandwidth(), carrier, per_sub, r, loc.theta, aperture);
                csv.rows.push_back({td, pdf_avg, piecewise, mean(gains[1]), fit, closed_form});
                min_pdf = std::min(min_pdf, pdf_avg);
                max_model_err = std::max(max_model_err, std::abs(closed_form - piecewise));
            }

            std::ostringstream summary;
            summary << "min PDF band-average gain over the sweep: " << format_value(min_pdf)
                    << "\n"
                    << "max |closed form - piecewise average|: " << format_value(max_model_err)
                    << "\n";
            csv.metadata = resolved.lines();
            return {std::move(csv), summary.str()};
        }

        // ------------------------------------------------------------------
        // avg-gain-vs-bandwidth: band-average gain as the band widens.
        ExperimentResult run_avg_gain_vs_bandwidth(const ExperimentConfig& config)
        {
            check_known_keys(config,
                             {"n_antennas", "subarray_antennas", "n_subcarriers", "user_r_m",
                              "user_theta_deg", "bandwidth_min_hz", "bandwidth_max_hz",
                              "bandwidth_points"});

            Resolved resolved;
            resolved.add("experiment", config.name);
            const double carrier = parse_carrier(config.params, resolved);
            const double spacing = parse_spacing(config.params, carrier, resolved);
            const int n_antennas = parse_n_antennas(config.params, resolved);
            const int per_sub = parse_subarray_antennas(config.params, n_antennas, resolved);
            const int n_subcarriers = config.params.get_int("n_subcarriers", 256);
            if (n_subcarriers < 1)
                throw ConfigError("field 'n_subcarriers': must be >= 1");
            resolved.add("n_subcarriers", n_subcarriers);
            const Location user = parse_location(config.params, 10.0, 45.0, resolved);

            const double b_lo = config.params.get_double("bandwidth_min_hz", 100e6);
            const double b_hi = config.params.get_double("bandwidth_max_hz", 10e9);
            const int b_pts = config.params.get_int("bandwidth_points", 34);
            if (!(b_lo >= 0.0) || b_hi < b_lo || b_pts < 1)
                throw ConfigError("field 'bandwidth_*': need 0 <= min <= max, points >= 1");
            if (n_subcarriers > 1 && b_hi >= 2.0 * carrier)
                throw ConfigError(
                    "field 'bandwidth_max_hz': band reaches zero frequency (needs B < 2 fc)");
            resolved.add("bandwidth_min_hz", b_lo);
            resolved.add("bandwidth_max_hz", b_hi);
            resolved.add("bandwidth_points", b_pts);

            const ArrayGeometry geometry(n_antennas, carrier, spacing);
            const SubArrayPartition partition(geometry, n_antennas / per_sub);
            const double aperture = n_antennas * spacing;

            CsvResult csv;
            csv.n_axis_columns = 1;
            csv.columns = {"bandwidth_hz",        "pdf_avg_gain",    "pdf_piecewise_avg_gain",
                           "narrowband_avg_gain", "fit_avg_gain", "closed_form_avg_gain"};

            const double nan = std::numeric_limits<double>::quiet_NaN();
            for (double b : linspace(b_lo, b_hi, b_pts))
            {
                const OfdmGrid grid(n_subcarriers, b, carrier);
                const std::vector<std::vector<double>> gains = gains_by_kind(
                    {BeamformerKind::pdf, BeamformerKind::narrowband}, partition, user, grid);
                const double piecewise =
                    avg_gain_exact(partition, user, pdf_design(partition, user), grid);
                // the quadratic fit only holds while the band edge stays in
                // the sub-array main lobe
                const bool in_lobe = grid.max_abs_eps() <= 2.0 / per_sub;
                const double fit = in_lobe ? avg_gain_fit(partition, user, grid) : nan;
                const double closed_form =
                    avg_gain_closed_form(b, carrier, per_sub, user.r, user.theta, aperture);
                csv.rows.push_back(
                    {b, mean(gains[0]), piecewise, mean(gains[1]), fit, closed_form});
            }

            std::ostringstream summary;
            summary << "PDF / narrowband band-average gain at max bandwidth: "
                    << format_value(csv.rows.back()[1]) << " / "
                    << format_value(csv.rows.back()[3]) << "\n";
            csv.metadata = resolved.lines();
            return {std::move(csv), summary.str()};
        }

        void append_rate_columns(CsvResult& csv, const std::vector<BeamformerKind>& kinds)
        {
            for (BeamformerKind kind : kinds)
                csv.columns.push_back("rate_" + to_string(kind));
            csv.columns.push_back("rate_ideal");
        }

        // ------------------------------------------------------------------
        // rate-vs-distance: band-average rate along a radial track.
        ExperimentResult run_rate_vs_distance(const ExperimentConfig& config)
        {
            check_known_keys(config, {"n_antennas", "subarray_antennas", "bandwidth_hz",
                                      "n_subcarriers", "user_theta_deg", "beamformer",
                                      "beamformers", "r_min_m", "r_max_m", "r_points",
                                      "snr_db"});

            Resolved resolved;
            resolved.add("experiment", config.name);
            const double carrier = parse_carrier(config.params, resolved);
            const double spacing = parse_spacing(config.params, carrier, resolved);
            const int n_antennas = parse_n_antennas(config.params, resolved);
            const int per_sub = parse_subarray_antennas(config.params, n_antennas, resolved);
            const OfdmGrid grid = parse_grid(config.params, carrier, resolved);

            const double theta_deg = config.params.get_double("user_theta_deg", 22.5);
            const double r_lo = config.params.get_double("r_min_m", 1.0);
            const double r_hi = config.params.get_double("r_max_m", 100.0);
            const int r_pts = config.params.get_int("r_points", 100);
            const double snr_db = config.params.get_double("snr_db", 10.0);
            if (!(std::abs(theta_deg) < 90.0))
                throw ConfigError("field 'user_theta_deg': must satisfy |theta| < 90");
            if (!(r_lo > 0.0) || r_hi < r_lo || r_pts < 1)
                throw ConfigError("field 'r_*': need 0 < r_min_m <= r_max_m, points >= 1");
            resolved.add("user_theta_deg", theta_deg);
            resolved.add("r_min_m", r_lo);
            resolved.add("r_max_m", r_hi);
            resolved.add("r_points", r_pts);
            resolved.add("snr_db", snr_db);
            const std::vector<BeamformerKind> kinds =
                parse_beamformers(config.params, {"pdf", "far-dpp", "narrowband"}, resolved);

            const ArrayGeometry geometry(n_antennas, carrier, spacing);
            const SubArrayPartition partition(geometry, n_antennas / per_sub);
            const double snr = db_to_linear(snr_db);
            const double theta = deg2rad(theta_deg);

            CsvResult csv;
            csv.n_axis_columns = 1;
            csv.columns = {"r_m"};
            append_rate_columns(csv, kinds);

            for (double r : linspace(r_lo, r_hi, r_pts))
            {
                const Location loc(r, theta);
                const std::vector<std::vector<double>> gains =
                    gains_by_kind(kinds, partition, loc, grid);
                std::vector<double> row = {r};
                for (const std::vector<double>& g : gains)
                    row.push_back(average_rate(g, snr));
                row.push_back(ideal_rate(snr));
                csv.rows.push_back(std::move(row));
            }

            std::ostringstream summary;
            const double r_eff = effective_rayleigh(n_antennas * spacing,
                                                    speed_of_light / carrier, theta, 0.05);
            summary << "effective Rayleigh distance at " << format_value(theta_deg)
                    << " deg (5% loss): " << format_value(r_eff) << " m\n";
            csv.metadata = resolved.lines();
            return {std::move(csv), summary.str()};
        }

        // ------------------------------------------------------------------
        // rate-vs-antennas: growing array at a fixed time-delayer count.
        ExperimentResult run_rate_vs_antennas(const ExperimentConfig& config)
        {
            check_known_keys(config, {"bandwidth_hz", "n_subcarriers", "user_r_m",
                                      "user_theta_deg", "beamformer", "beamformers",
                                      "subarrays", "n_min", "n_max", "n_step",
                                      "snr_db_offset"});

            Resolved resolved;
            resolved.add("experiment", config.name);
            const double carrier = parse_carrier(config.params, resolved);
            const double spacing = parse_spacing(config.params, carrier, resolved);
            const OfdmGrid grid = parse_grid(config.params, carrier, resolved);
            const Location user = parse_location(config.params, 30.0, 22.5, resolved);

            const int n_sub = config.params.get_int("subarrays", 16);
            const int n_lo = config.params.get_int("n_min", 16);
            const int n_hi = config.params.get_int("n_max", 800);
            const int n_step = config.params.get_int("n_step", 16);
            const double snr_offset = config.params.get_double("snr_db_offset", -10.0);
            if (n_sub < 1)
                throw ConfigError("field 'subarrays': must be >= 1");
            if (n_lo < n_sub || n_hi < n_lo || n_step < 1)
                throw ConfigError("field 'n_*': need subarrays <= n_min <= n_max, step >= 1");
            for (int n = n_lo; n <= n_hi; n += n_step)
                if (n % n_sub != 0)
                    throw ConfigError("field 'n_min'/'n_step': sweep value " +
                                      std::to_string(n) + " is not divisible by subarrays");
            resolved.add("subarrays", n_sub);
            resolved.add("n_min", n_lo);
            resolved.add("n_max", n_hi);
            resolved.add("n_step", n_step);
            resolved.add("snr_db_offset", snr_offset);
            resolved.add("snr_rule", "snr_db = snr_db_offset + 10*log10(n_antennas)");
            const std::vector<BeamformerKind> kinds =
                parse_beamformers(config.params, {"pdf", "far-dpp", "narrowband"}, resolved);

            CsvResult csv;
            csv.n_axis_columns = 1;
            csv.columns = {"n_antennas"};
            append_rate_columns(csv, kinds);

            for (int n = n_lo; n <= n_hi; n += n_step)
            {
                const ArrayGeometry geometry(n, carrier, spacing);
                const SubArrayPartition partition(geometry, n_sub);
                const double snr = db_to_linear(snr_offset + 10.0 * std::log10(n));

                const std::vector<std::vector<double>> gains =
                    gains_by_kind(kinds, partition, user, grid);
                std::vector<double> row = {static_cast<double>(n)};
                for (const std::vector<double>& g : gains)
                    row.push_back(average_rate(g, snr));
                row.push_back(ideal_rate(snr));
                csv.rows.push_back(std::move(row));
            }

            std::ostringstream summary;
            summary << "rows: " << csv.rows.size() << ", time delayers fixed at " << n_sub
                    << "\n";
            csv.metadata = resolved.lines();
            return {std::move(csv), summary.str()};
        }

        // ------------------------------------------------------------------
        // rate-vs-snr: Monte-Carlo over the service region.
        ExperimentResult run_rate_vs_snr(const ExperimentConfig& config)
        {
            check_known_keys(config,
                             {"n_antennas", "subarray_antennas", "bandwidth_hz",
                              "n_subcarriers", "seed", "beamformer", "beamformers",
                              "snr_min_db", "snr_max_db", "snr_points", "mc_samples",
                              "mc_r_min_m", "mc_r_max_m", "mc_theta_min_deg",
                              "mc_theta_max_deg"});

            Resolved resolved;
            resolved.add("experiment", config.name);
            const double carrier = parse_carrier(config.params, resolved);
            const double spacing = parse_spacing(config.params, carrier, resolved);
            const int n_antennas = parse_n_antennas(config.params, resolved);
            const int per_sub = parse_subarray_antennas(config.params, n_antennas, resolved);
            const OfdmGrid grid = parse_grid(config.params, carrier, resolved);

            const double snr_lo = config.params.get_double("snr_min_db", -5.0);
            const double snr_hi = config.params.get_double("snr_max_db", 10.0);
            const int snr_pts = config.params.get_int("snr_points", 7);
            const int samples = config.params.get_int("mc_samples", 1000);
            const double r_lo = config.params.get_double("mc_r_min_m", 1.0);
            const double r_hi = config.params.get_double("mc_r_max_m", 30.0);
            const double t_lo = config.params.get_double("mc_theta_min_deg", -60.0);
            const double t_hi = config.params.get_double("mc_theta_max_deg", 60.0);
            if (snr_hi < snr_lo || snr_pts < 1)
                throw ConfigError("field 'snr_*': need snr_min_db <= snr_max_db, points >= 1");
            if (samples < 1)
                throw ConfigError("field 'mc_samples': must be >= 1");
            if (!(r_lo > 0.0) || r_hi < r_lo)
                throw ConfigError("field 'mc_r_*': need 0 < min <= max");
            if (t_hi < t_lo || !(std::abs(t_lo) < 90.0) || !(std::abs(t_hi) < 90.0))
                throw ConfigError("field 'mc_theta_*': need -90 < min <= max < 90");
            resolved.add("snr_min_db", snr_lo);
            resolved.add("snr_max_db", snr_hi);
            resolved.add("snr_points", snr_pts);
            resolved.add("mc_samples", samples);
            resolved.add("mc_r_min_m", r_lo);
            resolved.add("mc_r_max_m", r_hi);
            resolved.add("mc_theta_min_deg", t_lo);
            resolved.add("mc_theta_max_deg", t_hi);
            const std::uint64_t seed = parse_seed(config.params, resolved);
            const std::vector<BeamformerKind> kinds =
                parse_beamformers(config.params, {"pdf", "far-dpp", "narrowband"}, resolved);

            const ArrayGeometry geometry(n_antennas, carrier, spacing);
            const SubArrayPartition partition(geometry, n_antennas / per_sub);

            // One draw of locations shared by every beamformer and SNR point.
            const std::vector<Location> locations =
                sample_locations(r_lo, r_hi, deg2rad(t_lo), deg2rad(t_hi), samples, seed);
            std::vector<std::vector<std::vector<double>>> gains;
            gains.reserve(locations.size());
            for (const Location& loc : locations)
                gains.push_back(gains_by_kind(kinds, partition, loc, grid));

            CsvResult csv;
            csv.n_axis_columns = 1;
            csv.columns = {"snr_db"};
            append_rate_columns(csv, kinds);

            for (double snr_db : linspace(snr_lo, snr_hi, snr_pts))
            {
                const double snr = db_to_linear(snr_db);
                std::vector<double> row = {snr_db};
                for (std::size_t b = 0; b < kinds.size(); ++b)
                {
                    double acc = 0.0;
                    for (std::size_t i = 0; i < locations.size(); ++i)
                        acc += average_rate(gains[i][b], snr);
                    row.push_back(acc / locations.size());
                }
                row.push_back(ideal_rate(snr));
                csv.rows.push_back(std::move(row));
            }

            std::ostringstream summary;
            summary << "mean rates at snr_db = " << format_value(csv.rows.back()[0]) << ":";
            for (std::size_t b = 0; b < kinds.size(); ++b)
                summary << " " << to_string(kinds[b]) << " = "
                        << format_value(csv.rows.back()[b + 1]);
            summary << "\n";
            csv.metadata = resolved.lines();
            return {std::move(csv), summary.str()};
        }

        // ------------------------------------------------------------------
        // rayleigh-report: classical and effective near-field boundaries.
        ExperimentResult run_rayleigh_report(const ExperimentConfig& config)
        {
            check_known_keys(config, {"n_antennas", "user_theta_deg", "coherence_loss"});

            Resolved resolved;
            resolved.add("experiment", config.name);
            const double carrier = parse_carrier(config.params, resolved);
            const double spacing = parse_spacing(config.params, carrier, resolved);
            const int n_antennas = parse_n_antennas(config.params, resolved);
            const double theta_deg = config.params.get_double("user_theta_deg", 22.5);
            const double delta = config.params.get_double("coherence_loss", 0.05);
            if (!(std::abs(theta_deg) < 90.0))
                throw ConfigError("field 'user_theta_deg': must satisfy |theta| < 90");
            if (!(delta > 0.0) || !(delta < 0.5))
                throw ConfigError("field 'coherence_loss': must lie in (0, 0.5)");
            resolved.add("user_theta_deg", theta_deg);
            resolved.add("coherence_loss", delta);

            const ArrayGeometry geometry(n_antennas, carrier, spacing);
            // The boundary formulas pair with the N d aperture form.
            const double aperture = n_antennas * spacing;
            const double lambda = geometry.wavelength();
            const double theta = deg2rad(theta_deg);

            const double classical = classical_rayleigh(aperture, lambda);
            const BetaDelta bd = solve_beta_delta(delta);
            const double r_eff = effective_rayleigh(aperture, lambda, theta, delta);
            const double coh = coherence(geometry, Location(r_eff, theta));

            CsvResult csv;
            csv.n_axis_columns = 1;
            csv.columns = {"aperture_m", "wavelength_m", "classical_rayleigh_m",
                           "beta_delta", "c_delta",      "effective_rayleigh_m",
                           "coherence_at_reff"};
            csv.rows.push_back({aperture, lambda, classical, bd.beta, bd.c_delta, r_eff, coh});

            std::ostringstream summary;
            summary << "classical Rayleigh distance: " << format_value(classical) << " m\n"
                    << "beta for " << format_value(100.0 * delta)
                    << "% loss: " << format_value(bd.beta)
                    << " (C = " << format_value(bd.c_delta) << ")\n"
                    << "effective Rayleigh distance at " << format_value(theta_deg)
                    << " deg: " << format_value(r_eff) << " m\n"
                    << "coherence at that boundary: " << format_value(coh) << "\n";
            csv.metadata = resolved.lines();
            return {std::move(csv), summary.str()};
        }

        // ------------------------------------------------------------------
        // size-report: sub-array sizing for a service region.
        ExperimentResult run_size_report(const ExperimentConfig& config)
        {
            check_known_keys(config, {"n_antennas", "bandwidth_hz", "rho_low_m", "rho_high_m",
                                      "theta_high_deg", "coherence_loss", "min_avg_gain"});

            Resolved resolved;
            resolved.add("experiment", config.name);
            const double carrier = parse_carrier(config.params, resolved);
            const double spacing = parse_spacing(config.params, carrier, resolved);
            const int n_antennas = parse_n_antennas(config.params, resolved);
            const double bandwidth = config.params.get_double("bandwidth_hz", 5e9);
            const double rho_lo = config.params.get_double("rho_low_m", 1.0);
            const double rho_hi = config.params.get_double("rho_high_m", 100.0);
            const double theta_h_deg = config.params.get_double("theta_high_deg", 60.0);
            const double delta_cap = config.params.get_double("coherence_loss", 0.05);
            const double delta_gain = config.params.get_double("min_avg_gain", 0.9);
            resolved.add("bandwidth_hz", bandwidth);
            resolved.add("rho_low_m", rho_lo);
            resolved.add("rho_high_m", rho_hi);
            resolved.add("theta_high_deg", theta_h_deg);
            resolved.add("coherence_loss", delta_cap);
            resolved.add("min_avg_gain", delta_gain);

            SizingResult result;
            try
            {
                const SizingSpec spec(ArrayGeometry(n_antennas, carrier, spacing), bandwidth,
                                      rho_lo, rho_hi, deg2rad(theta_h_deg), delta_cap,
                                      delta_gain);
                result = size_subarrays(spec);
            }
            catch (const std::invalid_argument& e)
            {
                throw ConfigError(e.what());
            }

            CsvResult csv;
            csv.n_axis_columns = 1;
            csv.columns = {"bound_wideband", "bound_farfield", "bound_gain", "chosen_p",
                           "n_subarrays",    "max_xi",         "max_xi_r_m"};
            csv.rows.push_back({result.bound_wideband, result.bound_farfield,
                                result.bound_gain, static_cast<double>(result.chosen_p),
                                static_cast<double>(result.n_subarrays), result.max_xi,
                                result.max_xi_r});

            std::ostringstream summary;
            summary << "bounds: wideband " << format_value(result.bound_wideband)
                    << ", far-field " << format_value(result.bound_farfield) << ", gain "
                    << format_value(result.bound_gain) << "\n"
                    << "chosen sub-array size P = " << result.chosen_p
                    << ", time delayers K = " << result.n_subarrays << "\n"
                    << "worst-case geometry loss factor " << format_value(result.max_xi)
                    << " at r = " << format_value(result.max_xi_r) << " m\n";
            csv.metadata = resolved.lines();
            return {std::move(csv), summary.str()};
        }

        using Runner = ExperimentResult (*)(const ExperimentConfig&);

        const std::vector<std::pair<std::string, Runner>>& runners()
        {
            static const std::vector<std::pair<std::string, Runner>> table = {
                {"gain-map", run_gain_map},
                {"gain-vs-direction", run_gain_vs_direction},
                {"avg-gain-vs-theta", run_avg_gain_vs_theta},
                {"avg-gain-vs-bandwidth", run_avg_gain_vs_bandwidth},
                {"rate-vs-distance", run_rate_vs_distance},
                {"rate-vs-antennas", run_rate_vs_antennas},
                {"rate-vs-snr", run_rate_vs_snr},
                {"rayleigh-report", run_rayleigh_report},
                {"size-report", run_size_report},
            };
            return table;
        }
    } // namespace

    BeamformerKind beamformer_from_string(const std::string& name)
    {
        if (name == "narrowband")
            return BeamformerKind::narrowband;
        if (name == "far-dpp")
            return BeamformerKind::far_dpp;
        if (name == "pdf")
            return BeamformerKind::pdf;
        throw ConfigError("unknown beamformer '" + name +
                          "' (expected narrowband, far-dpp, or pdf)");
    }

    std::string to_string(BeamformerKind kind)
    {
        switch (kind)
        {
        case BeamformerKind::narrowband:
            return "narrowband";
        case BeamformerKind::far_dpp:
            return "far-dpp";
        case BeamformerKind::pdf:
        default:
            return "pdf";
        }
    }

    const std::vector<std::string>& known_experiments()
    {
        static const std::vector<std::string> names = [] {
            std::vector<std::string> list;
            for (const auto& [name, fn] : runners())
                list.push_back(name);
            return list;
        }();
        return names;
    }

    ExperimentResult run(const ExperimentConfig& config)
    {
        for (const auto& [name, fn] : runners())
            if (name == config.name)
                return fn(config);
        throw ConfigError("unknown experiment '" + config.name + "'");
    }

    ExperimentResult compare(const std::vector<ExperimentConfig>& configs)
    {
        if (configs.empty())
            throw ConfigError("compare: need at least one config");
        if (configs.size() == 1)
            return run(configs.front());

        std::vector<CsvResult> tables;
        std::vector<std::string> labels;
        std::string summary;
        for (std::size_t i = 0; i < configs.size(); ++i)
        {
            ExperimentResult result = run(configs[i]);
            const std::string label =
                configs[i].params.get_string("label", "s" + std::to_string(i));
            for (std::string& line : result.csv.metadata)
                line = label + "." + line;
            summary += "[" + label + "] " + result.summary;
            labels.push_back(label);
            tables.push_back(std::move(result.csv));
        }

        CsvResult merged;
        try
        {
            merged = merge_series(tables, labels);
        }
        catch (const std::invalid_argument& e)
        {
            throw ConfigError(e.what());
        }
        for (const CsvResult& table : tables)
            for (const std::string& line : table.metadata)
                merged.metadata.push_back(line);
        return {std::move(merged), std::move(summary)};
    }

} // namespace beamsim
