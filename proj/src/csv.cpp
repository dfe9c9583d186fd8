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

#include "beamsim/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace beamsim
{
    std::string format_value(double value)
    {
        char buffer[40];
        std::snprintf(buffer, sizeof(buffer), "%.9g", value);
        return buffer;
    }

    std::string CsvResult::to_string() const
    {
        std::string out;
        for (const std::string& line : metadata)
            out += "# " + line + "\n";
        for (std::size_t c = 0; c < columns.size(); ++c)
        {
            if (c)
                out += ',';
            out += columns[c];
        }
        out += '\n';
        for (const std::vector<double>& row : rows)
        {
            if (row.size() != columns.size())
                throw std::runtime_error("CsvResult: ragged row");
            for (std::size_t c = 0; c < row.size(); ++c)
            {
                if (c)
                    out += ',';
                out += format_value(row[c]);
            }
            out += '\n';
        }
        return out;
    }

    void CsvResult::write_file(const std::string& path) const
    {
        const std::string body = to_string();
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file '" + path + "'");
        out << body;
        if (!out)
        {
            out.close();
            std::remove(path.c_str());
            throw std::runtime_error("failed while writing '" + path + "'");
        }
    }

    CsvResult CsvResult::parse(const std::string& text)
    {
        CsvResult result;
        std::istringstream in(text);
        std::string line;
        bool have_header = false;
        while (std::getline(in, line))
        {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            if (line.front() == '#')
            {
                std::size_t start = 1;
                if (start < line.size() && line[start] == ' ')
                    ++start;
                result.metadata.push_back(line.substr(start));
                continue;
            }
            std::vector<std::string> cells;
            std::string cell;
            std::istringstream row(line);
            while (std::getline(row, cell, ','))
                cells.push_back(cell);
            if (!have_header)
            {
                result.columns = cells;
                have_header = true;
                continue;
            }
            if (cells.size() != result.columns.size())
                throw std::runtime_error("CsvResult::parse: ragged row '" + line + "'");
            std::vector<double> values;
            values.reserve(cells.size());
            for (const std::string& c : cells)
            {
                char* end = nullptr;
                values.push_back(std::strtod(c.c_str(), &end));
                if (end == c.c_str() || *end != '\0')
                    throw std::runtime_error("CsvResult::parse: bad number '" + c + "'");
            }
            result.rows.push_back(std::move(values));
        }
        if (!have_header)
            throw std::runtime_error("CsvResult::parse: missing header row");
        return result;
    }

    CsvResult merge_series(const std::vector<CsvResult>& parts,
                           const std::vector<std::string>& labels)
    {
        if (parts.empty() || parts.size() != labels.size())
            throw std::invalid_argument("merge_series: need one label per table");

        const CsvResult& first = parts.front();
        CsvResult merged;
        merged.n_axis_columns = first.n_axis_columns;
        merged.columns.assign(first.columns.begin(),
                              first.columns.begin() + first.n_axis_columns);
        merged.rows.resize(first.rows.size());
        for (std::size_t r = 0; r < first.rows.size(); ++r)
            merged.rows[r].assign(first.rows[r].begin(),
                                  first.rows[r].begin() + first.n_axis_columns);

        for (std::size_t p = 0; p < parts.size(); ++p)
        {
            const CsvResult& part = parts[p];
            if (part.n_axis_columns != merged.n_axis_columns ||
                part.rows.size() != merged.rows.size())
                throw std::invalid_argument("merge_series: axis mismatch between tables");
            for (int c = 0; c < part.n_axis_columns; ++c)
                if (part.columns[c] != merged.columns[c])
                    throw std::invalid_argument("merge_series: axis mismatch between tables");
            for (std::size_t r = 0; r < part.rows.size(); ++r)
                for (int c = 0; c < part.n_axis_columns; ++c)
                    if (part.rows[r][c] != merged.rows[r][c])
                        throw std::invalid_argument("merge_series: axis values differ at row " +
                                                    std::to_string(r));

            for (std::size_t c = part.n_axis_columns; c < part.columns.size(); ++c)
            {
                const std::string label = labels[p].empty()
                                              ? part.columns[c]
                                              : labels[p] + "_" + part.columns[c];
                merged.columns.push_back(label);
                for (std::size_t r = 0; r < part.rows.size(); ++r)
                    merged.rows[r].push_back(part.rows[r][c]);
            }
        }
        return merged;
    }

} // namespace beamsim
