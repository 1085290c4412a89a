# Copyright 2026 The vhss-sim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Verifiable hybrid secret sharing simulator."""

from ._core import (
    CssCode,
    KeyShare,
    SchemeParams,
    TheoreticalBounds,
    Transcript,
    format_table1,
    key_averaged_density,
    load_code,
    props_suites,
    ramp_params,
    run_check,
    run_experiment,
    run_protocol,
    secrecy_tv,
    steane_code,
    strategies,
    strong_threshold_feasible,
    theoretical_bounds,
    vcss_reconstruct,
    vcss_share,
    vhss_params,
)

__all__ = [
    "CssCode",
    "KeyShare",
    "SchemeParams",
    "TheoreticalBounds",
    "Transcript",
    "format_table1",
    "key_averaged_density",
    "load_code",
    "props_suites",
    "ramp_params",
    "run_check",
    "run_experiment",
    "run_protocol",
    "secrecy_tv",
    "steane_code",
    "strategies",
    "strong_threshold_feasible",
    "theoretical_bounds",
    "vcss_reconstruct",
    "vcss_share",
    "vhss_params",
]
