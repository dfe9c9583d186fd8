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

#ifndef BEAMSIM_CSV_HPP
#define BEAMSIM_CSV_HPP

#include <string>
#include <vector>

namespace beamsim
{
    // Fixed 9-significant-digit decimal formatting ("%.9g"): deterministic
    // bytes for identical doubles on any IEEE-754 platform, unlike
    // shortest-round-trip printing.
    std::string format_value(double value);

    // Rectangular numeric table with '#'-prefixed metadata comment lines, a
    // header row, and LF line endings. The leading n_axis_columns columns are
    // the evaluation axes; the rest are data series.
    struct CsvResult
    {
        std::vector<std::string> metadata; // emitted as "# <line>"
        std::vector<std::string> columns;
        int n_axis_columns = 1;
        std::vector<std::vector<double>> rows;

        std::string to_string() const;
        void write_file(const std::string& path) const;

        // Inverse of to_string, used for round-trip checks. Metadata comes
        // back without the "# " prefix.
        static CsvResult parse(const std::string& text);
    };

    // Merge tables that share identical axis columns into one table whose
    // series are prefixed with the given labels. Throws on axis mismatch.
    CsvResult merge_series(const std::vector<CsvResult>& parts,
                           const std::vector<std::string>& labels);

} // namespace beamsim

#endif
