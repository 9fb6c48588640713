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

// superselect: runs the invariant suites and demos.
//
//   superselect verify <target> [--nmax N] [--seed S] [--tol key=val ...]
//                               [--format text|json] [--config FILE]
//   superselect demo <name> [--seed S] [--config FILE]
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superselect/config.hpp"
#include "superselect/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using superselect::verify::RunConfig;

/// Defaults, then the config file, then whichever flags were given.
RunConfig resolve(const std::string &config_path, const CLI::Option *nmax_opt, int nmax,
                  const CLI::Option *seed_opt, std::uint64_t seed,
                  const std::vector<std::string> &tols, const CLI::Option *format_opt,
                  const std::string &format) {
    namespace cfgns = superselect::config;
    RunConfig cfg;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        superselect::require(in.good(), "cannot open config file " + config_path);
        cfgns::apply(cfgns::parse(in), cfg);
    }
    if (nmax_opt != nullptr && nmax_opt->count() > 0) {
        superselect::require(nmax >= 1 && nmax <= 40, "--nmax must be in [1, 40]");
        cfg.nmax = nmax;
    }
    if (seed_opt != nullptr && seed_opt->count() > 0) {
        cfg.seed = seed;
    }
    for (const auto &t : tols) {
        cfgns::add_tolerance(cfg.tolerances, t);
    }
    if (format_opt != nullptr && format_opt->count() > 0) {
        cfg.format = cfgns::parse_format(format);
    }
    return cfg;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Superselection rule verification harness"};
    app.require_subcommand(1);

    std::string target;
    std::string demo_name;
    std::string config_path;
    int nmax = 6;
    std::uint64_t seed = 0;
    std::vector<std::string> tols;
    std::string format = "text";

    auto *verify = app.add_subcommand("verify", "Run invariant suites");
    verify->add_option("target", target, "all | state-core | spin | exchange | galilei | hatom")
        ->required();
    auto *nmax_opt = verify->add_option("--nmax", nmax, "Highest hydrogen level checked (default 6)");
    auto *seed_opt = verify->add_option("--seed", seed, "Random seed (default 0)");
    verify->add_option("--tol", tols, "Tolerance override suite.name=value")->expected(1, -1);
    auto *format_opt = verify->add_option("--format", format, "text | json");
    verify->add_option("--config", config_path, "key = value config file");

    auto *demo = app.add_subcommand("demo", "Print the quantities behind one superselection argument");
    demo->add_option("name", demo_name,
                     "univalence | exchange | mass | particle-number | phase-freedom")
        ->required();
    auto *demo_seed_opt = demo->add_option("--seed", seed, "Random seed (default 0)");
    demo->add_option("--config", config_path, "key = value config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    RunConfig cfg;
    try {
        cfg = verify->parsed()
                  ? resolve(config_path, nmax_opt, nmax, seed_opt, seed, tols, format_opt, format)
                  : resolve(config_path, nullptr, 0, demo_seed_opt, seed, {}, nullptr, "");
    } catch (const superselect::precondition_error &e) {
        std::cerr << "superselect: " << e.what() << "\n";
        return kExitUsage;
    }

    if (demo->parsed()) {
        const auto lines = superselect::verify::run_demo(demo_name, cfg.seed);
        if (!lines) {
            std::cerr << "superselect: unknown demo '" << demo_name << "'\n";
            return kExitUsage;
        }
        std::cout << "demo: " << demo_name << "\n";
        std::cout << "seed: " << cfg.seed << "\n";
        for (const auto &[k, v] : *lines) {
            std::cout << k << ": " << v << "\n";
        }
        return kExitPass;
    }

    std::optional<std::vector<superselect::report::CheckRecord>> records;
    try {
        records = superselect::verify::run_verify(target, cfg);
    } catch (const std::exception &e) {
        std::cerr << "superselect: check aborted: " << e.what() << "\n";
        return kExitFail;
    }
    if (!records) {
        std::cerr << "superselect: unknown target '" << target << "'\n";
        return kExitUsage;
    }

    bool all_passed = true;
    std::size_t failed = 0;
    for (const auto &r : *records) {
        all_passed = all_passed && r.passed;
        failed += r.passed ? 0 : 1;
        std::cout << (cfg.format == RunConfig::Format::json
                          ? superselect::report::to_json_line(r)
                          : superselect::report::to_text_line(r))
                  << "\n";
    }
    if (cfg.format == RunConfig::Format::text) {
        std::cout << records->size() - failed << "/" << records->size() << " checks passed\n";
    }
    return all_passed ? kExitPass : kExitFail;
}
