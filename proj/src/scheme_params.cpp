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

#include "vhss/scheme_params.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "vhss/css_code.hpp"

namespace vhss {

CodeParameters CodeParameters::of(const CssCode &css) {
    return {css.n(), css.distance(), css.name()};
}

std::string SchemeParams::str() const {
    std::string s = "{" + std::to_string(p) + "," + std::to_string(t) + ",";
    if (kind == SchemeKind::ramp_vhss) {
        s += std::to_string(t_prime) + ",";
    }
    return s + std::to_string(n) + "}";
}

SchemeParams vhss_params(const CodeParameters &code, std::size_t n_c, VcssKind kind,
                         std::optional<std::size_t> requested_t) {
    if (n_c < code.n) {
        throw std::invalid_argument("n_c (" + std::to_string(n_c) + ") must be at least the code length (" +
                                    std::to_string(code.n) + ")");
    }
    std::size_t t = requested_t.value_or(code.correctable());
    if (t > code.correctable()) {
        throw std::invalid_argument("requested t = " + std::to_string(t) + " exceeds the code tolerance " +
                                    std::to_string(code.correctable()));
    }
    SchemeParams s;
    s.kind = SchemeKind::vhss;
    s.n = std::max(n_c, code.n);
    s.n_q = code.n;
    s.n_c = n_c;
    s.t = t;
    std::size_t max_secrecy = (s.n - 1) / 2;
    if (kind == VcssKind::rabin_like) {
        s.p = max_secrecy;
    } else {
        if (s.n < 3 * t + 1) {
            throw std::invalid_argument("stinson_like needs n >= 3t + 1");
        }
        // No-cloning caps p regardless of how much slack the classical side leaves.
        s.p = std::min(s.n - 3 * t - 1, max_secrecy);
    }
    return s;
}

SchemeParams ramp_params(const CodeParameters &code, std::size_t t, std::size_t t_prime) {
    if (t + t_prime > code.correctable()) {
        throw std::invalid_argument("ramp budget t + t' = " + std::to_string(t + t_prime) + " exceeds floor((d-1)/2) = " +
                                    std::to_string(code.correctable()));
    }
    SchemeParams s;
    s.kind = SchemeKind::ramp_vhss;
    s.n = code.n;
    s.n_q = code.n;
    s.n_c = code.n;
    s.p = (code.n - 1) / 2;
    s.t = t;
    s.t_prime = t_prime;
    return s;
}

std::vector<Table1Family> table1_families(std::size_t t) {
    if (t < 1) {
        throw std::invalid_argument("table1_families needs t >= 1");
    }
    return {
        {"2(t+1)^2", 2 * (t + 1) * (t + 1)},
        {"3t^2+3t+1", 3 * t * t + 3 * t + 1},
        {"6t^2+1", 6 * t * t + 1},
        {"8t^2+4t+1", 8 * t * t + 4 * t + 1},
    };
}

bool strong_threshold_feasible(std::size_t p, std::size_t t, std::size_t t_prime, std::size_t n) {
    (void)p;
    // p = n - t' - 1 is forced; the remaining inequality n - t' - t > n - t' - 1 reduces to t < 1.
    long long lhs = static_cast<long long>(n) - static_cast<long long>(t_prime) - static_cast<long long>(t);
    long long rhs = static_cast<long long>(n) - static_cast<long long>(t_prime) - 1;
    return lhs > rhs;
}

std::vector<Table1Cell> table1_cells() {
    std::vector<Table1Cell> cells;
    for (std::size_t f = 0; f < 4; f++) {
        for (std::size_t t : {2, 4}) {
            auto fam = table1_families(t)[f];
            CodeParameters code{fam.n, 2 * t + 1, fam.formula};
            cells.push_back({fam.formula, SchemeKind::vhss, t, vhss_params(code, fam.n, VcssKind::rabin_like)});
        }
        for (std::size_t t : {1, 2}) {
            // A ramp cell at t splits a code tolerance of 2t evenly between t and t'.
            auto fam = table1_families(2 * t)[f];
            CodeParameters code{fam.n, 4 * t + 1, fam.formula};
            cells.push_back({fam.formula, SchemeKind::ramp_vhss, t, ramp_params(code, t, t)});
        }
    }
    return cells;
}

std::string format_table1() {
    std::ostringstream out;
    out << std::left << std::setw(12) << "family" << std::setw(14) << "vhss t=2" << std::setw(14) << "vhss t=4"
        << std::setw(14) << "ramp t=1"
        << "ramp t=2\n";
    auto cells = table1_cells();
    for (std::size_t row = 0; row < 4; row++) {
        out << std::setw(12) << cells[row * 4].formula;
        for (std::size_t k = 0; k < 4; k++) {
            if (k == 3) {
                out << cells[row * 4 + k].params.str() << "\n";
            } else {
                out << std::setw(14) << cells[row * 4 + k].params.str();
            }
        }
    }
    return out.str();
}

}  // namespace vhss
