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

#ifndef BEAMSIM_CONFIG_HPP
#define BEAMSIM_CONFIG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace beamsim
{
    // Invalid or inconsistent user input (config file or CLI); maps to exit
    // code 2 at the CLI boundary.
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Flat "key = value" configuration. Blank lines and lines starting with
    // '#' are ignored; values keep internal whitespace.
    class KeyValueConfig
    {
    public:
        KeyValueConfig() = default;

        static KeyValueConfig parse_file(const std::string& path);
        static KeyValueConfig parse_string(const std::string& text);

        bool has(const std::string& key) const;
        void set(const std::string& key, const std::string& value);

        std::string get_string(const std::string& key, const std::string& fallback) const;
        double get_double(const std::string& key, double fallback) const;
        int get_int(const std::string& key, int fallback) const;
        std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
        bool get_bool(const std::string& key, bool fallback) const;

        // Comma-separated list, items trimmed.
        std::vector<std::string> get_list(const std::string& key,
                                          const std::vector<std::string>& fallback) const;

        // Every key present in the config, sorted.
        std::vector<std::string> keys() const;

    private:
        std::map<std::string, std::string> values_;
    };

} // namespace beamsim

#endif
