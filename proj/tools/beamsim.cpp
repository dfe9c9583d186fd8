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

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "beamsim/experiments.hpp"

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_config_error = 2;
    constexpr int exit_numerical_error = 3;
} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"beamsim - near-field wideband beamforming experiments"};

    std::string experiment;
    std::string config_path;
    std::string out_path;
    std::string seed_text;
    bool force = false;

    std::string experiments_help;
    for (const std::string& name : beamsim::known_experiments())
        experiments_help += (experiments_help.empty() ? "" : ", ") + name;

    app.add_option("experiment", experiment, "one of: " + experiments_help)->required();
    app.add_option("--config", config_path, "key = value config file")->required();
    app.add_option("--out", out_path, "output CSV path (overrides the config's `output`)");
    app.add_option("--seed", seed_text, "RNG seed (overrides the config's `seed`)");
    app.add_flag("--force", force, "overwrite an existing output file");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return exit_config_error;
    }

    try
    {
        beamsim::ExperimentConfig config;
        config.name = experiment;
        config.params = beamsim::KeyValueConfig::parse_file(config_path);
        if (!seed_text.empty())
            config.params.set("seed", seed_text);

        const std::string csv_path =
            out_path.empty() ? config.params.get_string("output", "") : out_path;
        if (csv_path.empty())
            throw beamsim::ConfigError(
                "no output path: set `output` in the config or pass --out");
        config.params.set("output", csv_path);
        if (!force && std::filesystem::exists(csv_path))
            throw beamsim::ConfigError("output file '" + csv_path +
                                       "' exists; pass --force to overwrite");

        const beamsim::ExperimentResult result = beamsim::run(config);
        result.csv.write_file(csv_path);
        std::cout << result.summary;
        std::cout << "wrote " << csv_path << " (" << result.csv.rows.size() << " rows)\n";
        return exit_ok;
    }
    catch (const beamsim::ConfigError& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    }
    catch (const std::exception& e)
    {
        // write_file cleans up its own partial output, so nothing to undo here
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical_error;
    }
}
