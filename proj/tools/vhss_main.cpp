// Copyright 2026 The vhss-sim Authors
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

// vhss: run experiments, print the parameter table, or run property suites.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "vhss/experiment.hpp"
#include "vhss/props.hpp"
#include "vhss/scheme_params.hpp"

namespace {

constexpr int EXIT_RUNTIME = 1;
constexpr int EXIT_USAGE = 2;

int cmd_run(const std::string &config_path, const std::vector<std::string> &overrides,
            const std::vector<std::pair<std::string, std::string>> &flags) {
    vhss::ExperimentConfig cfg;
    try {
        if (!config_path.empty()) {
            cfg = vhss::load_config(config_path);
        }
        for (const auto &kv : overrides) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("expected key=value, got '" + kv + "'");
            }
            cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
        }
        for (const auto &[k, v] : flags) {
            cfg.set(k, v);
        }
        vhss::protocol_config(cfg);
    } catch (const std::invalid_argument &e) {
        std::cerr << "vhss run: " << e.what() << "\n";
        return EXIT_USAGE;
    }

    auto report = vhss::run_experiment(cfg);
    if (cfg.out.empty()) {
        vhss::write_rows(report, cfg.format, std::cout);
        std::cerr << vhss::aggregate_json(report.aggregate) << "\n";
        return 0;
    }
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + cfg.out);
    }
    vhss::write_rows(report, cfg.format, out);
    out.close();
    if (!out) {
        throw std::runtime_error("write to " + cfg.out + " failed");
    }
    std::cout << vhss::aggregate_json(report.aggregate) << "\n";
    return 0;
}

int cmd_props(const std::string &suite) {
    std::vector<int> ids;
    try {
        ids = vhss::suite_checks(suite);
    } catch (const std::invalid_argument &e) {
        std::cerr << "vhss props: " << e.what() << "\nsuites:";
        for (const auto &s : vhss::props_suites()) {
            std::cerr << " " << s;
        }
        std::cerr << "\n";
        return EXIT_USAGE;
    }
    bool ok = true;
    for (int id : ids) {
        auto r = vhss::run_check(id);
        std::cout << vhss::format_check(r) << std::endl;
        ok = ok && r.pass;
    }
    return ok ? 0 : EXIT_RUNTIME;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Verifiable hybrid secret sharing simulator"};
    app.require_subcommand(1);

    auto *run = app.add_subcommand("run", "run protocol trials and write one row per trial");
    std::string config_path, seed, trials, out, format;
    std::vector<std::string> overrides;
    run->add_option("--config", config_path, "key=value config file");
    run->add_option("--seed", seed, "master seed");
    run->add_option("--trials", trials, "number of trials");
    run->add_option("--out", out, "row file (rows go to stdout otherwise)");
    run->add_option("--format", format, "jsonl or csv");
    run->add_option("overrides", overrides, "extra key=value settings (code, n_c, t, t_prime, r, secret, strategy, workers)");

    auto *table = app.add_subcommand("table1", "print the sixteen scheme parameter cells");

    auto *props = app.add_subcommand("props", "run a property suite");
    std::string suite;
    props->add_option("suite", suite, "codes | tableau | vcss | protocol | secrecy")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return EXIT_USAGE;
    }

    try {
        if (*run) {
            std::vector<std::pair<std::string, std::string>> flags;
            for (auto [k, v] : {std::pair<const char *, std::string *>{"seed", &seed},
                                {"trials", &trials}, {"out", &out}, {"format", &format}}) {
                if (run->count(std::string("--") + k)) {
                    flags.emplace_back(k, *v);
                }
            }
            return cmd_run(config_path, overrides, flags);
        }
        if (*table) {
            std::cout << vhss::format_table1();
            return 0;
        }
        return cmd_props(suite);
    } catch (const std::exception &e) {
        std::cerr << "vhss: " << e.what() << "\n";
        return EXIT_RUNTIME;
    }
}
