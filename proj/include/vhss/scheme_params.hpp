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

#ifndef VHSS_SCHEME_PARAMS_HPP
#define VHSS_SCHEME_PARAMS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vhss {

class CssCode;

/// (n, d) of a code family member. Families without a construction only carry these.
struct CodeParameters {
    std::size_t n = 0;
    std::size_t d = 0;
    std::string name;

    static CodeParameters of(const CssCode &css);
    std::size_t correctable() const {
        return d == 0 ? 0 : (d - 1) / 2;
    }
};

enum class SchemeKind { vhss, ramp_vhss };
enum class VcssKind { rabin_like, stinson_like };

struct SchemeParams {
    std::size_t p = 0;
    std::size_t t = 0;
    std::size_t t_prime = 0;
    std::size_t n = 0;
    std::size_t n_q = 0;
    std::size_t n_c = 0;
    SchemeKind kind = SchemeKind::vhss;

    bool operator==(const SchemeParams &) const = default;
    /// "{p,t,n}" or "{p,t,t',n}".
    std::string str() const;
};

SchemeParams vhss_params(const CodeParameters &code, std::size_t n_c, VcssKind kind,
                         std::optional<std::size_t> requested_t = {});
SchemeParams ramp_params(const CodeParameters &code, std::size_t t, std::size_t t_prime);

struct Table1Family {
    std::string formula;
    std::size_t n;
};

/// The four node-count families evaluated at code tolerance t.
std::vector<Table1Family> table1_families(std::size_t t);

/// True iff the strong threshold condition n - t' - t > n - t' - 1 can hold.
bool strong_threshold_feasible(std::size_t p, std::size_t t, std::size_t t_prime, std::size_t n);

struct Table1Cell {
    std::string formula;
    SchemeKind kind;
    std::size_t column_t;
    SchemeParams params;
};

/// All sixteen cells: vhss for t in {2,4}, ramp for t in {1,2}.
std::vector<Table1Cell> table1_cells();
std::string format_table1();

}  // namespace vhss

#endif
