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

#include <cmath>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "superselect/config.hpp"
#include "superselect/report.hpp"

namespace ss = superselect;
namespace rp = superselect::report;
namespace cf = superselect::config;
using ss::verify::RunConfig;

TEST(Report, NumbersRoundTrip) {
    const double x = 0.1 + 0.2;
    EXPECT_EQ(std::stod(rp::format_number(x)), x);
    EXPECT_EQ(rp::format_number(std::nan("")), "nan");
    EXPECT_EQ(rp::format_number(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(Report, JsonLineIsFlatAndParses) {
    const rp::CheckRecord r{"hatom", "spectrum", {{"n", "3"}, {"side", "left"}}, 1.5e-13, 1e-6,
                            true};
    const auto j = nlohmann::json::parse(rp::to_json_line(r));
    EXPECT_EQ(j["suite"], "hatom");
    EXPECT_EQ(j["name"], "spectrum");
    EXPECT_EQ(j["parameters"], "n=3;side=left");
    EXPECT_EQ(j["observed"].get<double>(), 1.5e-13);
    EXPECT_EQ(j["passed"], true);
    for (const auto &[k, v] : j.items()) {
        EXPECT_FALSE(v.is_structured()) << k;
    }
}

TEST(Report, NonFiniteObservedStaysValidJson) {
    const rp::CheckRecord r{"s", "n", {}, std::nan(""), 1.0, false};
    const auto j = nlohmann::json::parse(rp::to_json_line(r));
    EXPECT_EQ(j["observed"], "nan");
}

TEST(Report, TextLine) {
    const rp::CheckRecord r{"spin", "univalence_distance", {{"a", "1"}}, 0.0, 1e-12, false};
    EXPECT_EQ(rp::to_text_line(r),
              "FAIL spin/univalence_distance [a=1] observed=0 tolerance=9.9999999999999998e-13");
}

TEST(Report, SortIsNumericAware) {
    std::vector<rp::CheckRecord> v{
        {"hatom", "spectrum", rp::param("n", 10), 0, 0, true},
        {"hatom", "spectrum", rp::param("n", 2), 0, 0, true},
        {"galilei", "zzz", {}, 0, 0, true},
        {"hatom", "boundary", rp::param("n", 1), 0, 0, true},
    };
    rp::sort_records(v);
    EXPECT_EQ(v[0].suite, "galilei");
    EXPECT_EQ(v[1].name, "boundary");
    EXPECT_EQ(v[2].parameters[0].second, "2");
    EXPECT_EQ(v[3].parameters[0].second, "10");
}

TEST(Recorder, CheckSemanticsAndOverrides) {
    rp::ToleranceOverrides o{{"x.loose", 1.0}};
    rp::Recorder rec("x", o);
    rec.at_most("tight", {}, 0.5, 0.1);
    rec.at_most("loose", {}, 0.5, 0.1);
    rec.at_least("threshold", {}, 0.2, 0.2);
    rec.above("strict", {}, 0.2, 0.2);
    rec.at_most("nan", {}, std::nan(""), 1.0);
    const auto r = rec.take();
    ASSERT_EQ(r.size(), 5u);
    EXPECT_FALSE(r[0].passed);
    EXPECT_TRUE(r[1].passed);
    EXPECT_EQ(r[1].tolerance, 1.0);
    EXPECT_TRUE(r[2].passed);
    EXPECT_FALSE(r[3].passed);
    EXPECT_FALSE(r[4].passed);
}

TEST(Config, ParsesKeyValueLines) {
    std::istringstream in("# header\n\nnmax = 4\n seed=7 # trailing\nformat = json\n"
                          "tol.hatom.spectrum = 1e-7\n");
    RunConfig cfg;
    cf::apply(cf::parse(in), cfg);
    EXPECT_EQ(cfg.nmax, 4);
    EXPECT_EQ(cfg.seed, 7u);
    EXPECT_EQ(cfg.format, RunConfig::Format::json);
    EXPECT_EQ(cfg.tolerances.at("hatom.spectrum"), 1e-7);
}

TEST(Config, RejectsMalformedInput) {
    RunConfig cfg;
    auto apply_text = [&](const std::string &text) {
        std::istringstream in(text);
        cf::apply(cf::parse(in), cfg);
    };
    EXPECT_THROW(apply_text("nmax 4\n"), ss::precondition_error);
    EXPECT_THROW(apply_text("nmax = \n"), ss::precondition_error);
    EXPECT_THROW(apply_text("nmax = 0\n"), ss::precondition_error);
    EXPECT_THROW(apply_text("nmax = 4x\n"), ss::precondition_error);
    EXPECT_THROW(apply_text("seed = -1\n"), ss::precondition_error);
    EXPECT_THROW(apply_text("format = yaml\n"), ss::precondition_error);
    EXPECT_THROW(apply_text("colour = red\n"), ss::precondition_error);
    EXPECT_THROW(apply_text("tol.hatom.spectrum = -1\n"), ss::precondition_error);
}

TEST(Config, ToleranceOverrideSyntax) {
    rp::ToleranceOverrides t;
    cf::add_tolerance(t, "spin.univalence_distance=1e-9");
    EXPECT_EQ(t.at("spin.univalence_distance"), 1e-9);
    EXPECT_THROW(cf::add_tolerance(t, "nokey"), ss::precondition_error);
    EXPECT_THROW(cf::add_tolerance(t, "=1"), ss::precondition_error);
    EXPECT_THROW(cf::add_tolerance(t, "a.b=abc"), ss::precondition_error);
}
