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

#ifndef VHSS_EXPERIMENT_HPP
#define VHSS_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vhss/protocol.hpp"

namespace vhss {

/// Flat key=value experiment description. Keys: code n_c t t_prime r secret strategy trials
/// seed out format workers. '#' starts a comment.
struct ExperimentConfig {
    std::string code = "steane7";  // steane7 or a fixture path
    std::size_t n_c = 0;           // 0: same as the code length
    std::optional<std::size_t> t;
    std::size_t t_prime = 0;
    std::size_t r = 4;
    std::string secret = "generic";  // zero one plus minus generic random, or "re,im,re,im"
    std::string strategy = "honest";
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "jsonl";
    std::size_t workers = 0;  // 0: hardware concurrency

    /// Throws std::invalid_argument naming the key on bad input.
    void set(const std::string &key, const std::string &value);
};

ExperimentConfig parse_config(std::istream &in);
ExperimentConfig load_config(const std::string &path);

CssCode load_code(const std::string &name);
/// Checks the request against the scheme calculators (t + t' within the code tolerance).
ProtocolConfig protocol_config(const ExperimentConfig &cfg);
/// Secret for one trial; "random" draws from the trial's own stream.
AmplitudePair trial_secret(const std::string &spec, std::uint64_t trial_seed);

struct TrialRow {
    std::size_t trial = 0;
    Transcript transcript;
};

struct Aggregate {
    std::size_t trials = 0;
    std::size_t aborts = 0;
    double abort_rate = 0;
    double abort_sigma = 0;  // binomial standard error
    std::size_t completed = 0;  // non-aborted runs with a fidelity
    std::optional<double> mean_fidelity;
    std::optional<double> min_fidelity;
    std::size_t unrecoverable = 0;
    std::size_t max_peak_workspace = 0;
    TheoreticalBounds bounds;  // at delta = delta' = delta'' = 1/2
};

struct Report {
    std::vector<TrialRow> rows;
    Aggregate aggregate;
};

Aggregate aggregate_rows(const std::vector<TrialRow> &rows, std::size_t r);

/// Runs cfg.trials trials; trial i uses trial_seed(cfg.seed, i). Rows come back in trial order.
Report run_experiment(const ExperimentConfig &cfg);
/// Protocol runs for seeds trial_seed(seed, i), fanned out over worker threads.
std::vector<Transcript> run_trials(const ProtocolConfig &pcfg, const std::string &secret, std::size_t trials,
                                   std::uint64_t seed, std::size_t workers = 0);

/// Pinned row fields: trial seed code n n_q n_c t r strategy aborted B fidelity peak_workspace eps_c_bound.
std::string row_jsonl(const TrialRow &row);
std::string csv_header();
std::string row_csv(const TrialRow &row);
std::string aggregate_json(const Aggregate &agg);

void write_rows(const Report &report, const std::string &format, std::ostream &out);

}  // namespace vhss

#endif
