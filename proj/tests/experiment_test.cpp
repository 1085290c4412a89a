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

#include "vhss/experiment.hpp"

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "vhss/props.hpp"

using namespace vhss;

#ifndef VHSS_FIXTURE_DIR
#define VHSS_FIXTURE_DIR "tests/fixtures"
#endif

TEST(config, parses_key_values) {
    std::istringstream in("# comment\ncode = steane7\n\nr=3  # trailing\nstrategy = cheater_pauli:Z:encoding\n"
                          "trials = 12\nseed = 99\nformat = csv\nt_prime = 0\nn_c = 9\n");
    auto cfg = parse_config(in);
    ASSERT_EQ(cfg.r, 3u);
    ASSERT_EQ(cfg.strategy, "cheater_pauli:Z:encoding");
    ASSERT_EQ(cfg.trials, 12u);
    ASSERT_EQ(cfg.seed, 99u);
    ASSERT_EQ(cfg.format, "csv");
    ASSERT_EQ(cfg.n_c, 9u);
    ASSERT_FALSE(cfg.t.has_value());
}

TEST(config, errors_name_the_problem) {
    auto message = [](const std::string &text) {
        std::istringstream in(text);
        try {
            parse_config(in);
        } catch (const std::invalid_argument &e) {
            return std::string(e.what());
        }
        return std::string();
    };
    ASSERT_NE(message("colour = red\n").find("unknown config key 'colour'"), std::string::npos);
    ASSERT_NE(message("r = -1\n").find("r: expected a non-negative integer"), std::string::npos);
    ASSERT_NE(message("\n\nr\n").find("line 3"), std::string::npos);
    ASSERT_NE(message("format = xml\n").find("jsonl or csv"), std::string::npos);
    ASSERT_THROW(load_config("/nonexistent/x.cfg"), std::runtime_error);
}

TEST(config, protocol_config_checks_budget) {
    ExperimentConfig cfg;
    cfg.t_prime = 1;
    // t defaults to what is left after t'
    ASSERT_EQ(protocol_config(cfg).t.value(), 0u);
    cfg.t = 1;
    ASSERT_THROW(protocol_config(cfg), std::invalid_argument);
    cfg = {};
    cfg.strategy = "nope";
    ASSERT_THROW(protocol_config(cfg), std::invalid_argument);
    cfg = {};
    cfg.code = std::string(VHSS_FIXTURE_DIR) + "/steane.css";
    ASSERT_EQ(protocol_config(cfg).css.n(), 7u);
    cfg.code = std::string(VHSS_FIXTURE_DIR) + "/rep3_invalid.css";
    ASSERT_THROW(protocol_config(cfg), std::invalid_argument);
}

TEST(config, secrets) {
    ASSERT_EQ(trial_secret("one", 0).beta, std::complex<double>(1, 0));
    ASSERT_NEAR(trial_secret("minus", 0).beta.real(), -std::sqrt(0.5), 1e-15);
    auto a = trial_secret("random", 5), b = trial_secret("random", 5), c = trial_secret("random", 6);
    ASSERT_EQ(a.alpha, b.alpha);
    ASSERT_NE(a.alpha, c.alpha);
    auto e = trial_secret("0.6,0,0,0.8", 0);
    ASSERT_EQ(e.beta, std::complex<double>(0, 0.8));
    ASSERT_THROW(trial_secret("0.6,0,0", 0), std::invalid_argument);
    ASSERT_THROW(trial_secret("1,0,1,0", 0), std::invalid_argument);
    ASSERT_THROW(trial_secret("sideways", 0), std::invalid_argument);
}

TEST(report, rows_follow_the_pinned_schema) {
    ExperimentConfig cfg;
    cfg.r = 1;
    cfg.trials = 6;
    cfg.strategy = "dealer_inconsistent_tree";
    cfg.secret = "random";
    auto rep = run_experiment(cfg);
    ASSERT_EQ(rep.rows.size(), 6u);
    const std::vector<std::string> fields = {"trial", "seed", "code", "n", "n_q", "n_c", "t", "r",
                                             "strategy", "aborted", "B", "fidelity", "peak_workspace", "eps_c_bound"};
    std::ostringstream out;
    write_rows(rep, "jsonl", out);
    std::istringstream lines(out.str());
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::ordered_json::parse(line);
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) {
            keys.push_back(it.key());
        }
        ASSERT_EQ(keys, fields);
        ASSERT_EQ(j["trial"], count);
        ASSERT_EQ(j["seed"], trial_seed(cfg.seed, count));
        ASSERT_EQ(j["aborted"].get<bool>(), j["fidelity"].is_null());
        ASSERT_EQ(j["peak_workspace"].size(), 7u);
        count++;
    }
    ASSERT_EQ(count, 6u);

    std::ostringstream csv;
    write_rows(rep, "csv", csv);
    ASSERT_EQ(csv.str().substr(0, csv_header().size()), csv_header());
    ASSERT_THROW(write_rows(rep, "xml", csv), std::invalid_argument);
}

TEST(report, aggregate_recomputes_from_rows) {
    ExperimentConfig cfg;
    cfg.r = 1;
    cfg.trials = 40;
    cfg.strategy = "dealer_inconsistent_tree";
    auto rep = run_experiment(cfg);
    std::size_t aborts = 0;
    double sum = 0;
    std::size_t done = 0;
    for (const auto &row : rep.rows) {
        aborts += row.transcript.aborted;
        if (!row.transcript.aborted) {
            sum += *row.transcript.fidelity;
            done++;
        }
    }
    const auto &a = rep.aggregate;
    ASSERT_EQ(a.aborts, aborts);
    ASSERT_DOUBLE_EQ(a.abort_rate, aborts / 40.0);
    ASSERT_DOUBLE_EQ(a.abort_sigma, std::sqrt(a.abort_rate * (1 - a.abort_rate) / 40.0));
    ASSERT_EQ(a.completed, done);
    if (done) {
        ASSERT_DOUBLE_EQ(*a.mean_fidelity, sum / done);
    }
    ASSERT_EQ(a.max_peak_workspace, 21u);
    ASSERT_EQ(a.bounds.eps_c, 1.5);
    auto j = nlohmann::json::parse(aggregate_json(a));
    ASSERT_EQ(j["aborts"], aborts);
}

TEST(report, honest_example) {
    ExperimentConfig cfg;
    cfg.r = 2;
    cfg.trials = 100;
    cfg.secret = "random";
    auto a = run_experiment(cfg).aggregate;
    ASSERT_EQ(a.abort_rate, 0.0);
    ASSERT_EQ(a.mean_fidelity.value(), 1.0);
    ASSERT_EQ(a.min_fidelity.value(), 1.0);
}

TEST(report, worker_count_does_not_change_rows) {
    ExperimentConfig cfg;
    cfg.r = 1;
    cfg.trials = 17;
    cfg.strategy = "cheater_pauli:random:pre_verification";
    cfg.secret = "random";
    cfg.workers = 1;
    std::ostringstream a, b;
    write_rows(run_experiment(cfg), "jsonl", a);
    cfg.workers = 4;
    write_rows(run_experiment(cfg), "jsonl", b);
    ASSERT_EQ(a.str(), b.str());
}

TEST(props, suites_and_quick_checks) {
    ASSERT_EQ(props_suites().size(), 5u);
    ASSERT_THROW(suite_checks("bogus"), std::invalid_argument);
    std::size_t total = 0;
    for (const auto &s : props_suites()) {
        total += suite_checks(s).size();
    }
    ASSERT_EQ(total, static_cast<std::size_t>(check_count()));
    for (int id : {1, 2, 13}) {
        auto r = run_check(id);
        ASSERT_TRUE(r.pass) << format_check(r);
    }
    ASSERT_EQ(format_check({3, "x", false, "why", 0.5}), "FAIL  3 x (0.50 s): why");
    ASSERT_THROW(run_check(99), std::invalid_argument);
}
