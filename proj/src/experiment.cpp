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

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "vhss/scheme_params.hpp"

namespace vhss {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string &key, const std::string &value) {
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument(key + ": expected a non-negative integer, got '" + value + "'");
    }
    try {
        return std::stoull(value);
    } catch (const std::out_of_range &) {
        throw std::invalid_argument(key + ": value out of range '" + value + "'");
    }
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <typename T>
std::string join(const std::vector<T> &v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (i) {
            out += sep;
        }
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

void ExperimentConfig::set(const std::string &key, const std::string &value) {
    if (key == "code") {
        code = value;
    } else if (key == "n_c") {
        n_c = parse_u64(key, value);
    } else if (key == "t") {
        t = parse_u64(key, value);
    } else if (key == "t_prime") {
        t_prime = parse_u64(key, value);
    } else if (key == "r") {
        r = parse_u64(key, value);
    } else if (key == "secret") {
        secret = value;
    } else if (key == "strategy") {
        strategy = value;
    } else if (key == "trials") {
        trials = parse_u64(key, value);
    } else if (key == "seed") {
        seed = parse_u64(key, value);
    } else if (key == "out") {
        out = value;
    } else if (key == "format") {
        if (value != "jsonl" && value != "csv") {
            throw std::invalid_argument("format: expected jsonl or csv, got '" + value + "'");
        }
        format = value;
    } else if (key == "workers") {
        workers = parse_u64(key, value);
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

ExperimentConfig parse_config(std::istream &in) {
    ExperimentConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key=value");
        }
        try {
            cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path);
    }
    return parse_config(in);
}

CssCode load_code(const std::string &name) {
    if (name == "steane7" || name == "steane") {
        return steane_code();
    }
    return load_css_fixture(name);
}

ProtocolConfig protocol_config(const ExperimentConfig &cfg) {
    ProtocolConfig p{load_code(cfg.code)};
    p.n_c = cfg.n_c;
    p.t = cfg.t;
    p.r = cfg.r;
    p.strategy = AdversaryStrategy::parse(cfg.strategy);
    auto code = CodeParameters::of(p.css);
    std::size_t t = cfg.t.value_or(code.correctable() - std::min(code.correctable(), cfg.t_prime));
    p.t = t;
    // throws when t + t' is over budget
    ramp_params(code, t, cfg.t_prime);
    resolve(p);
    return p;
}

AmplitudePair trial_secret(const std::string &spec, std::uint64_t seed) {
    if (spec == "zero") {
        return AmplitudePair::zero();
    }
    if (spec == "one") {
        return AmplitudePair::one();
    }
    if (spec == "plus") {
        return AmplitudePair::plus();
    }
    if (spec == "minus") {
        return AmplitudePair::plus().apply_z();
    }
    if (spec == "generic") {
        return AmplitudePair::from_angles(1.1, 0.4);
    }
    if (spec == "random") {
        Rng rng = stream_rng(seed, "secret");
        return AmplitudePair::random(rng);
    }
    std::vector<double> v;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(tok, &used));
            if (used != tok.size()) {
                throw std::invalid_argument("");
            }
        } catch (const std::exception &) {
            throw std::invalid_argument("secret: expected a preset or re,im,re,im; got '" + spec + "'");
        }
    }
    if (v.size() != 4) {
        throw std::invalid_argument("secret: expected four numbers re,im,re,im; got '" + spec + "'");
    }
    AmplitudePair a{{v[0], v[1]}, {v[2], v[3]}};
    if (!a.is_normalized(1e-9)) {
        throw std::invalid_argument("secret: amplitudes are not normalized");
    }
    return a;
}

std::vector<Transcript> run_trials(const ProtocolConfig &pcfg, const std::string &secret, std::size_t trials,
                                   std::uint64_t seed, std::size_t workers) {
    trial_secret(secret, 0);  // reject bad specs before spawning anything
    std::vector<Transcript> out(trials);
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = std::min(workers, std::max<std::size_t>(trials, 1));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= trials) {
                return;
            }
            try {
                auto s = trial_seed(seed, i);
                out[i] = run_full(pcfg, trial_secret(secret, s), s);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) {
                    error = std::current_exception();
                }
                next = trials;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; w++) {
            pool.emplace_back(work);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

Aggregate aggregate_rows(const std::vector<TrialRow> &rows, std::size_t r) {
    Aggregate a;
    a.trials = rows.size();
    double sum = 0;
    for (const auto &row : rows) {
        const auto &tr = row.transcript;
        a.aborts += tr.aborted;
        a.unrecoverable += tr.unrecoverable;
        for (auto p : tr.peak_workspace) {
            a.max_peak_workspace = std::max(a.max_peak_workspace, p);
        }
        if (!tr.aborted && tr.fidelity) {
            a.completed++;
            sum += *tr.fidelity;
            a.min_fidelity = a.min_fidelity ? std::min(*a.min_fidelity, *tr.fidelity) : *tr.fidelity;
        }
    }
    if (a.trials) {
        a.abort_rate = static_cast<double>(a.aborts) / static_cast<double>(a.trials);
        a.abort_sigma = std::sqrt(a.abort_rate * (1 - a.abort_rate) / static_cast<double>(a.trials));
    }
    if (a.completed) {
        a.mean_fidelity = sum / static_cast<double>(a.completed);
    }
    a.bounds = theoretical_bounds(r, 0.5, 0.5, 0.5);
    return a;
}

Report run_experiment(const ExperimentConfig &cfg) {
    auto pcfg = protocol_config(cfg);
    auto transcripts = run_trials(pcfg, cfg.secret, cfg.trials, cfg.seed, cfg.workers);
    Report rep;
    for (std::size_t i = 0; i < transcripts.size(); i++) {
        rep.rows.push_back({i, std::move(transcripts[i])});
    }
    rep.aggregate = aggregate_rows(rep.rows, cfg.r);
    return rep;
}

std::string row_jsonl(const TrialRow &row) {
    const auto &tr = row.transcript;
    ordered_json j;
    j["trial"] = row.trial;
    j["seed"] = tr.seed;
    j["code"] = tr.code;
    j["n"] = tr.n;
    j["n_q"] = tr.n_q;
    j["n_c"] = tr.n_c;
    j["t"] = tr.t;
    j["r"] = tr.r;
    j["strategy"] = tr.strategy;
    j["aborted"] = tr.aborted;
    j["B"] = tr.B;
    if (tr.fidelity && !tr.aborted) {
        j["fidelity"] = *tr.fidelity;
    } else {
        j["fidelity"] = nullptr;
    }
    j["peak_workspace"] = tr.peak_workspace;
    j["eps_c_bound"] = tr.eps_c_bound;
    return j.dump();
}

std::string csv_header() {
    return "trial,seed,code,n,n_q,n_c,t,r,strategy,aborted,B,fidelity,peak_workspace,eps_c_bound";
}

std::string row_csv(const TrialRow &row) {
    const auto &tr = row.transcript;
    std::string out = std::to_string(row.trial) + "," + std::to_string(tr.seed) + ",\"" + tr.code + "\"," +
                      std::to_string(tr.n) + "," + std::to_string(tr.n_q) + "," + std::to_string(tr.n_c) + "," +
                      std::to_string(tr.t) + "," + std::to_string(tr.r) + ",\"" + tr.strategy + "\"," +
                      (tr.aborted ? "true" : "false") + ",\"" + join(tr.B, ';') + "\",";
    if (tr.fidelity && !tr.aborted) {
        out += fmt_double(*tr.fidelity);
    }
    out += ",\"" + join(tr.peak_workspace, ';') + "\"," + fmt_double(tr.eps_c_bound);
    return out;
}

std::string aggregate_json(const Aggregate &a) {
    ordered_json j;
    j["trials"] = a.trials;
    j["aborts"] = a.aborts;
    j["abort_rate"] = a.abort_rate;
    j["abort_sigma"] = a.abort_sigma;
    j["completed"] = a.completed;
    j["mean_fidelity"] = a.mean_fidelity ? ordered_json(*a.mean_fidelity) : ordered_json(nullptr);
    j["min_fidelity"] = a.min_fidelity ? ordered_json(*a.min_fidelity) : ordered_json(nullptr);
    j["unrecoverable"] = a.unrecoverable;
    j["max_peak_workspace"] = a.max_peak_workspace;
    j["eps_c_bound"] = a.bounds.eps_c;
    j["fidelity_lower_bound"] = a.bounds.fidelity_lower;
    j["abort_lower_bound"] = a.bounds.abort_lower;
    return j.dump();
}

void write_rows(const Report &report, const std::string &format, std::ostream &out) {
    if (format == "csv") {
        out << csv_header() << "\n";
        for (const auto &row : report.rows) {
            out << row_csv(row) << "\n";
        }
        return;
    }
    if (format != "jsonl") {
        throw std::invalid_argument("format: expected jsonl or csv, got '" + format + "'");
    }
    for (const auto &row : report.rows) {
        out << row_jsonl(row) << "\n";
    }
}

}  // namespace vhss
