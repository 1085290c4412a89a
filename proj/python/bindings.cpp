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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vhss/css_code.hpp"
#include "vhss/experiment.hpp"
#include "vhss/props.hpp"
#include "vhss/protocol.hpp"
#include "vhss/scheme_params.hpp"
#include "vhss/vcss.hpp"

namespace py = pybind11;
using namespace vhss;

namespace {

ProtocolConfig make_config(const std::string &code, std::size_t r, const std::string &strategy, std::size_t n_c,
                           std::optional<std::size_t> t) {
    ProtocolConfig cfg{load_code(code)};
    cfg.r = r;
    cfg.strategy = AdversaryStrategy::parse(strategy);
    cfg.n_c = n_c;
    cfg.t = t;
    resolve(cfg);
    return cfg;
}

AmplitudePair amps_of(std::complex<double> alpha, std::complex<double> beta) {
    return {alpha, beta};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Verifiable hybrid secret sharing simulator";

    py::class_<CssCode>(m, "CssCode")
        .def_property_readonly("n", &CssCode::n)
        .def_property_readonly("distance", &CssCode::distance)
        .def_property_readonly("correctable", &CssCode::correctable)
        .def_property_readonly("name", &CssCode::name)
        .def_property_readonly("encoder_slot", &CssCode::encoder_slot)
        .def_property_readonly("x_rep", [](const CssCode &c) { return c.x_rep().str(); })
        .def_property_readonly("z_rep", [](const CssCode &c) { return c.z_rep().str(); })
        .def("stabilizers", [](const CssCode &c) {
            std::vector<std::string> out;
            for (const auto &s : c.stabilizer_generators()) {
                out.push_back(s.str());
            }
            return out;
        });
    m.def("steane_code", &steane_code);
    m.def("load_code", &load_code, py::arg("name"), "steane7 or a fixture path");

    py::class_<SchemeParams>(m, "SchemeParams")
        .def_readonly("p", &SchemeParams::p)
        .def_readonly("t", &SchemeParams::t)
        .def_readonly("t_prime", &SchemeParams::t_prime)
        .def_readonly("n", &SchemeParams::n)
        .def_readonly("n_q", &SchemeParams::n_q)
        .def_readonly("n_c", &SchemeParams::n_c)
        .def("__str__", &SchemeParams::str)
        .def("__repr__", [](const SchemeParams &s) { return "SchemeParams" + s.str(); });
    m.def(
        "vhss_params",
        [](std::size_t n, std::size_t d, std::size_t n_c, const std::string &kind, std::optional<std::size_t> t) {
            VcssKind k;
            if (kind == "rabin_like") {
                k = VcssKind::rabin_like;
            } else if (kind == "stinson_like") {
                k = VcssKind::stinson_like;
            } else {
                throw py::value_error("kind must be rabin_like or stinson_like");
            }
            return vhss_params(CodeParameters{n, d, ""}, n_c, k, t);
        },
        py::arg("n"), py::arg("d"), py::arg("n_c"), py::arg("kind") = "rabin_like", py::arg("t") = py::none());
    m.def(
        "ramp_params",
        [](std::size_t n, std::size_t d, std::size_t t, std::size_t t_prime) {
            return ramp_params(CodeParameters{n, d, ""}, t, t_prime);
        },
        py::arg("n"), py::arg("d"), py::arg("t"), py::arg("t_prime"));
    m.def("strong_threshold_feasible", &strong_threshold_feasible, py::arg("p"), py::arg("t"), py::arg("t_prime"),
          py::arg("n"));
    m.def("format_table1", &format_table1);

    py::class_<TheoreticalBounds>(m, "TheoreticalBounds")
        .def_readonly("abort_lower", &TheoreticalBounds::abort_lower)
        .def_readonly("eps_c", &TheoreticalBounds::eps_c)
        .def_readonly("fidelity_lower", &TheoreticalBounds::fidelity_lower);
    m.def("theoretical_bounds", &theoretical_bounds, py::arg("r"), py::arg("delta") = 0.5, py::arg("delta_p") = 0.5,
          py::arg("delta_pp") = 0.5);

    py::class_<Transcript>(m, "Transcript")
        .def_readonly("seed", &Transcript::seed)
        .def_readonly("code", &Transcript::code)
        .def_readonly("n", &Transcript::n)
        .def_readonly("n_q", &Transcript::n_q)
        .def_readonly("n_c", &Transcript::n_c)
        .def_readonly("t", &Transcript::t)
        .def_readonly("r", &Transcript::r)
        .def_readonly("strategy", &Transcript::strategy)
        .def_readonly("aborted", &Transcript::aborted)
        .def_readonly("abort_reason", &Transcript::abort_reason)
        .def_readonly("B", &Transcript::B)
        .def_readonly("B_i", &Transcript::B_i)
        .def_readonly("vcss_accused", &Transcript::vcss_accused)
        .def_readonly("fidelity", &Transcript::fidelity)
        .def_readonly("unrecoverable", &Transcript::unrecoverable)
        .def_readonly("failure", &Transcript::failure)
        .def_readonly("peak_workspace", &Transcript::peak_workspace)
        .def_readonly("phase_peaks", &Transcript::phase_peaks)
        .def_readonly("eps_c_bound", &Transcript::eps_c_bound)
        .def_readonly("round_log", &Transcript::round_log)
        .def_property_readonly("key", [](const Transcript &t) { return std::make_pair(t.key.a, t.key.b); })
        .def("to_json", [](const Transcript &t, std::size_t trial) { return row_jsonl({trial, t}); },
             py::arg("trial") = 0);

    m.def("strategies", [] {
        std::vector<std::string> out;
        for (const auto &s : strategy_library()) {
            out.push_back(s.str());
        }
        return out;
    });

    m.def(
        "run_protocol",
        [](std::complex<double> alpha, std::complex<double> beta, std::uint64_t seed, const std::string &code,
           std::size_t r, const std::string &strategy, std::size_t n_c, std::optional<std::size_t> t,
           bool keep_log) {
            auto cfg = make_config(code, r, strategy, n_c, t);
            cfg.keep_log = keep_log;
            py::gil_scoped_release release;
            return run_full(cfg, amps_of(alpha, beta), seed);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("seed"), py::arg("code") = "steane7", py::arg("r") = 4,
        py::arg("strategy") = "honest", py::arg("n_c") = 0, py::arg("t") = py::none(), py::arg("keep_log") = false,
        "One full sharing, verification and reconstruction run.");

    m.def(
        "run_experiment",
        [](const std::map<std::string, std::string> &settings) {
            ExperimentConfig cfg;
            for (const auto &[k, v] : settings) {
                cfg.set(k, v);
            }
            Report rep;
            {
                py::gil_scoped_release release;
                rep = run_experiment(cfg);
            }
            std::vector<std::string> rows;
            for (const auto &row : rep.rows) {
                rows.push_back(row_jsonl(row));
            }
            return std::make_pair(rows, aggregate_json(rep.aggregate));
        },
        py::arg("settings"), "Runs trials from key=value settings; returns (JSON rows, JSON aggregate).");

    m.def(
        "secrecy_tv",
        [](std::size_t trials, std::uint64_t seed, std::size_t r) {
            py::gil_scoped_release release;
            return secrecy_tv(make_config("steane7", r, "honest", 0, std::nullopt), trials, seed);
        },
        py::arg("trials"), py::arg("seed"), py::arg("r") = 1);

    m.def(
        "key_averaged_density",
        [](std::complex<double> alpha, std::complex<double> beta) {
            auto rho = key_averaged_density(amps_of(alpha, beta));
            return std::vector<std::vector<std::complex<double>>>{{rho[0][0], rho[0][1]}, {rho[1][0], rho[1][1]}};
        },
        py::arg("alpha"), py::arg("beta"));

    py::class_<KeyShare>(m, "KeyShare")
        .def_readonly("node", &KeyShare::node)
        .def_property_readonly("eval_point", [](const KeyShare &s) { return s.eval_point.value(); })
        .def_property_readonly("share_a", [](const KeyShare &s) { return s.share_a.value(); })
        .def_property_readonly("share_b", [](const KeyShare &s) { return s.share_b.value(); })
        .def("serialize", [](const KeyShare &s) {
            auto bytes = serialize_share(s);
            return py::bytes(reinterpret_cast<const char *>(bytes.data()), bytes.size());
        });
    m.def(
        "vcss_share",
        [](bool a, bool b, std::size_t n_c, std::size_t t, std::size_t rounds, std::uint64_t seed) {
            Rng rng(seed);
            return vcss_share({a, b}, n_c, t, rounds, rng).shares;
        },
        py::arg("a"), py::arg("b"), py::arg("n_c"), py::arg("t"), py::arg("rounds") = 0, py::arg("seed") = 0);
    m.def(
        "vcss_reconstruct",
        [](const std::vector<KeyShare> &shares, std::size_t t) {
            auto rec = vcss_reconstruct(shares, t);
            if (!rec.ok) {
                throw py::value_error(rec.error);
            }
            return std::make_pair(rec.key.a, rec.key.b);
        },
        py::arg("shares"), py::arg("t"));

    m.def("props_suites", &props_suites);
    m.def(
        "run_check",
        [](int id) {
            CheckResult r;
            {
                py::gil_scoped_release release;
                r = run_check(id);
            }
            return py::make_tuple(r.pass, format_check(r));
        },
        py::arg("id"));
}
