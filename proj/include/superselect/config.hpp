// Copyright 2026 The superselect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Run configuration layering: built-in defaults < config file < flags.
 *
 * Config files are line oriented:
 *
 *     # comment
 *     nmax = 6
 *     seed = 0
 *     format = json
 *     tol.hatom.spectrum = 1e-7
 */
#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "verify.hpp"

namespace superselect::config {

using Entries = std::vector<std::pair<std::string, std::string>>;

inline std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Reads `key = value` lines; blank lines and '#' comments are skipped.
inline Entries parse(std::istream &in) {
    Entries out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        require(eq != std::string::npos,
                "config line " + std::to_string(lineno) + ": expected key = value");
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        require(!key.empty() && !value.empty(),
                "config line " + std::to_string(lineno) + ": empty key or value");
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

inline double parse_double(const std::string &s, const std::string &what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    require(pos == s.size() && pos > 0, what + ": not a number: " + s);
    return v;
}

inline long long parse_integer(const std::string &s, const std::string &what) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    require(pos == s.size() && pos > 0, what + ": not an integer: " + s);
    return v;
}

inline verify::RunConfig::Format parse_format(const std::string &s) {
    if (s == "text") {
        return verify::RunConfig::Format::text;
    }
    require(s == "json", "format must be text or json, got " + s);
    return verify::RunConfig::Format::json;
}

/// "suite.name=value" into the override map.
inline void add_tolerance(report::ToleranceOverrides &tols, const std::string &entry) {
    const auto eq = entry.find('=');
    require(eq != std::string::npos && eq > 0, "tolerance override must be key=value: " + entry);
    const auto key = trim(entry.substr(0, eq));
    const double v = parse_double(trim(entry.substr(eq + 1)), "tolerance " + key);
    require(v >= 0.0, "tolerance " + key + " must be non-negative");
    tols[key] = v;
}

inline void apply(const Entries &entries, verify::RunConfig &cfg) {
    for (const auto &[key, value] : entries) {
        if (key == "nmax") {
            const auto n = parse_integer(value, "nmax");
            require(n >= 1 && n <= 40, "nmax must be in [1, 40]");
            cfg.nmax = static_cast<int>(n);
        } else if (key == "seed") {
            const auto s = parse_integer(value, "seed");
            require(s >= 0, "seed must be non-negative");
            cfg.seed = static_cast<std::uint64_t>(s);
        } else if (key == "format") {
            cfg.format = parse_format(value);
        } else if (key.rfind("tol.", 0) == 0) {
            add_tolerance(cfg.tolerances, key.substr(4) + "=" + value);
        } else {
            throw precondition_error("unknown config key: " + key);
        }
    }
}

} // namespace superselect::config
