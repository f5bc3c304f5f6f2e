# Copyright 2026 The GSRP Authors
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


"""Generalized steered response power localization.

Thin Python layer over the C++ core. Runs are driven by the same
configuration files as the ``gsrp`` command-line tool.
"""

from ._gsrp import (
    ConfigError,
    DimensionMismatch,
    NumericalError,
    RunConfig,
    compute_error,
    ds_psd,
    golden_names,
    load_config,
    localize,
    mpcnr_psd,
    mpdr_psd,
    mvcnr_psd,
    mvdr_psd,
    nearfield_config,
    nmf_psd,
    parse_config,
    quantile,
    read_wav,
    run_golden,
    simulate,
    write_wav,
    zeta2_flat,
    zeta2_frob,
)

__all__ = [
    "ConfigError",
    "DimensionMismatch",
    "NumericalError",
    "RunConfig",
    "compute_error",
    "ds_psd",
    "golden_names",
    "load_config",
    "localize",
    "mpcnr_psd",
    "mpdr_psd",
    "mvcnr_psd",
    "mvdr_psd",
    "nearfield_config",
    "nmf_psd",
    "parse_config",
    "quantile",
    "read_wav",
    "run_golden",
    "simulate",
    "write_wav",
    "zeta2_flat",
    "zeta2_frob",
]
