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
 * Flat check records and their deterministic text / JSON-lines rendering.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superselect::report {

using Parameters = std::vector<std::pair<std::string, std::string>>;

struct CheckRecord {
    std::string suite;
    std::string name;
    Parameters parameters;
    double observed = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// %.17g; enough digits to round-trip a double.
inline std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string format_parameters(const Parameters &p) {
    std::string out;
    for (const auto &[k, v] : p) {
        if (!out.empty()) {
            out += ';';
        }
        out += k + "=" + v;
    }
    return out;
}

namespace detail {

inline bool parse_number(const std::string &s, double &out) {
    if (s.empty()) {
        return false;
    }
    char *end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

/// Values compare numerically when both parse as numbers, so n=2 < n=10.
inline int compare_value(const std::string &a, const std::string &b) {
    double x = 0.0;
    double y = 0.0;
    if (parse_number(a, x) && parse_number(b, y) && x != y) {
        return x < y ? -1 : 1;
    }
    return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

inline bool parameters_less(const Parameters &a, const Parameters &b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].first != b[i].first) {
            return a[i].first < b[i].first;
        }
        if (int c = compare_value(a[i].second, b[i].second); c != 0) {
            return c < 0;
        }
    }
    return a.size() < b.size();
}

inline std::string json_string(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + "\"";
}

inline std::string json_number(double x) {
    return std::isfinite(x) ? format_number(x) : json_string(format_number(x));
}

} // namespace detail

/// Orders records by (suite, name, parameters).
inline void sort_records(std::vector<CheckRecord> &records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const CheckRecord &a, const CheckRecord &b) {
                         if (a.suite != b.suite) {
                             return a.suite < b.suite;
                         }
                         if (a.name != b.name) {
                             return a.name < b.name;
                         }
                         return detail::parameters_less(a.parameters,
                                                        b.parameters);
                     });
}

/// One JSON object per line, no nesting.
inline std::string to_json_line(const CheckRecord &r) {
    return "{\"suite\":" + detail::json_string(r.suite) +
           ",\"name\":" + detail::json_string(r.name) +
           ",\"parameters\":" + detail::json_string(format_parameters(r.parameters)) +
           ",\"observed\":" + detail::json_number(r.observed) +
           ",\"tolerance\":" + detail::json_number(r.tolerance) +
           ",\"passed\":" + (r.passed ? "true" : "false") + "}";
}

inline std::string to_text_line(const CheckRecord &r) {
    std::string out = r.passed ? "PASS " : "FAIL ";
    out += r.suite + "/" + r.name;
    if (!r.parameters.empty()) {
        out += " [" + format_parameters(r.parameters) + "]";
    }
    out += " observed=" + format_number(r.observed) +
           " tolerance=" + format_number(r.tolerance);
    return out;
}

/// Per-check tolerance overrides keyed by "suite.name".
using ToleranceOverrides = std::map<std::string, double>;

/// Collects the records of one suite, applying tolerance overrides.
class Recorder {
  public:
    Recorder(std::string suite, const ToleranceOverrides &overrides)
        : suite_(std::move(suite)), overrides_(&overrides) {}

    /// Error-style check: passes iff observed <= tolerance.
    void at_most(const std::string &name, Parameters params, double observed,
                 double tolerance) {
        const double t = tolerance_for(name, tolerance);
        add(name, std::move(params), observed, t, observed <= t);
    }

    /// Threshold check: passes iff observed >= threshold.
    void at_least(const std::string &name, Parameters params, double observed,
                  double threshold) {
        const double t = tolerance_for(name, threshold);
        add(name, std::move(params), observed, t, observed >= t);
    }

    /// Threshold check: passes iff observed > threshold.
    void above(const std::string &name, Parameters params, double observed,
               double threshold) {
        const double t = tolerance_for(name, threshold);
        add(name, std::move(params), observed, t, observed > t);
    }

    [[nodiscard]] std::vector<CheckRecord> take() { return std::move(records_); }

  private:
    double tolerance_for(const std::string &name, double fallback) const {
        auto it = overrides_->find(suite_ + "." + name);
        return it == overrides_->end() ? fallback : it->second;
    }

    void add(const std::string &name, Parameters params, double observed,
             double tolerance, bool passed) {
        // NaN never passes.
        records_.push_back({suite_, name, std::move(params), observed, tolerance,
                            passed && !std::isnan(observed)});
    }

    std::string suite_;
    const ToleranceOverrides *overrides_;
    std::vector<CheckRecord> records_;
};

inline Parameters param(const std::string &key, long long value) {
    return {{key, std::to_string(value)}};
}

} // namespace superselect::report
