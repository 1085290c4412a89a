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

// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "vhss/props.hpp"

int main(int argc, char **argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool ok = true;
    for (int id = 1; id <= vhss::check_count(); id++) {
        if (only && id != only) {
            continue;
        }
        auto r = vhss::run_check(id);
        std::cout << vhss::format_check(r) << std::endl;
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
