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

#include "beamsim/config.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace beamsim
{
    namespace
    {
        std::string trim(const std::string& s)
        {
            const auto begin = s.find_first_not_of(" \t\r\n");
            if (begin == std::string::npos)
                return "";
            const auto end = s.find_last_not_of(" \t\r\n");
            return s.substr(begin, end - begin + 1);
        }
    } // namespace

    KeyValueConfig KeyValueConfig::parse_file(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open config file '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_string(buffer.str());
    }

    KeyValueConfig KeyValueConfig::parse_string(const std::string& text)
    {
        KeyValueConfig config;
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            const std::string stripped = trim(line);
            if (stripped.empty() || stripped.front() == '#')
                continue;
            const auto eq = stripped.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": expected 'key = value', got '" + stripped + "'");
            const std::string key = trim(stripped.substr(0, eq));
            const std::string value = trim(stripped.substr(eq + 1));
            if (key.empty())
                throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
            if (config.values_.count(key))
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": duplicate key '" + key + "'");
            config.values_[key] = value;
        }
        return config;
    }

    bool KeyValueConfig::has(const std::string& key) const
    {
        return values_.count(key) != 0;
    }

    void KeyValueConfig::set(const std::string& key, const std::string& value)
    {
        values_[key] = value;
    }

    std::string KeyValueConfig::get_string(const std::string& key,
                                           const std::string& fallback) const
    {
        const auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    double KeyValueConfig::get_double(const std::string& key, double fallback) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            return fallback;
        const char* text = it->second.c_str();
        char* end = nullptr;
        const double value = std::strtod(text, &end);
        if (end == text || *end != '\0')
            throw ConfigError("field '" + key + "': expected a number, got '" + it->second + "'");
        return value;
    }

    int KeyValueConfig::get_int(const std::string& key, int fallback) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            return fallback;
        const char* text = it->second.c_str();
        char* end = nullptr;
        const long value = std::strtol(text, &end, 10);
        if (end == text || *end != '\0' || value < INT_MIN || value > INT_MAX)
            throw ConfigError("field '" + key + "': expected an integer, got '" + it->second +
                              "'");
        return static_cast<int>(value);
    }

    std::uint64_t KeyValueConfig::get_u64(const std::string& key, std::uint64_t fallback) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            return fallback;
        const char* text = it->second.c_str();
        char* end = nullptr;
        const unsigned long long value = std::strtoull(text, &end, 10);
        if (end == text || *end != '\0')
            throw ConfigError("field '" + key + "': expected an unsigned integer, got '" +
                              it->second + "'");
        return value;
    }

    bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            return fallback;
        if (it->second == "true" || it->second == "1")
            return true;
        if (it->second == "false" || it->second == "0")
            return false;
        throw ConfigError("field '" + key + "': expected true/false, got '" + it->second + "'");
    }

    std::vector<std::string> KeyValueConfig::get_list(
        const std::string& key, const std::vector<std::string>& fallback) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            return fallback;

        std::vector<std::string> items;
        std::string item;
        std::istringstream in(it->second);
        while (std::getline(in, item, ','))
        {
            const std::string trimmed = trim(item);
            if (!trimmed.empty())
                items.push_back(trimmed);
        }
        if (items.empty())
            throw ConfigError("field '" + key + "': expected a comma-separated list");
        return items;
    }

    std::vector<std::string> KeyValueConfig::keys() const
    {
        std::vector<std::string> keys;
        keys.reserve(values_.size());
        for (const auto& [key, value] : values_)
            keys.push_back(key);
        return keys;
    }

} // namespace beamsim
