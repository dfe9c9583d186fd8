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

#ifndef BEAMSIM_EXPERIMENTS_HPP
#define BEAMSIM_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "beamsim/config.hpp"
#include "beamsim/csv.hpp"

namespace beamsim
{
    // The beamformer families the harness can score.
    enum class BeamformerKind
    {
        narrowband, // phase-shifter focusing at the carrier
        far_dpp,    // far-field delay-phase baseline (direction only)
        pdf         // phase-delay focusing
    };

    BeamformerKind beamformer_from_string(const std::string& name);
    std::string to_string(BeamformerKind kind);

    // One declarative experiment: a name plus flat key = value parameters.
    // Unset parameters fall back to the reference desk configuration
    // (256 antennas, 100 GHz carrier, 5 GHz band, 256 subcarriers, P = 32).
    struct ExperimentConfig
    {
        std::string name;
        KeyValueConfig params;
    };

    const std::vector<std::string>& known_experiments();

    struct ExperimentResult
    {
        CsvResult csv;
        std::string summary;
    };

    // Execute one experiment. Deterministic for a fixed config (including the
    // seed); the CSV embeds the fully resolved configuration as comments.
    ExperimentResult run(const ExperimentConfig& config);

    // Merge several experiments that share identical axes into one table; the
    // series of config i are prefixed with its `label` parameter. A single
    // config degenerates to run().
    ExperimentResult compare(const std::vector<ExperimentConfig>& configs);

} // namespace beamsim

#endif
