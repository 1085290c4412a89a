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

#ifndef VHSS_PROPS_HPP
#define VHSS_PROPS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace vhss {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Sample sizes of the statistical checks.
struct CheckSizes {
    std::size_t completeness_runs = 1000;  // per r
    std::size_t soundness_runs = 10000;    // per r
    std::size_t library_runs = 1000;       // per strategy
    std::size_t post_verification_runs = 1000;  // per pattern
    std::size_t secrecy_runs = 10000;
    std::size_t reduction_samples = 10000;
    std::size_t reduction_instances = 300;
    std::size_t tableau_circuits = 500;
    std::size_t vcss_split_runs = 10000;
};

/// Numbered acceptance checks 1..13.
CheckResult run_check(int id, const CheckSizes &sizes = {});
int check_count();

const std::vector<std::string> &props_suites();
/// Check ids making up a suite; throws std::invalid_argument for unknown names.
std::vector<int> suite_checks(const std::string &suite);

/// "PASS  3 completeness (1.2 s): detail"
std::string format_check(const CheckResult &r);

}  // namespace vhss

#endif
