# Copyright 2026 The qsep Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Separator-based correctability certificates for stabilizer codes."""

from qsep._core import (
    CapExceeded,
    CertificationError,
    Code,
    Graph,
    InputError,
    ProvenanceError,
    abc_partition,
    build_graph,
    builtin_code,
    certify_set,
    check_certificate,
    code_distance,
    code_from_paulis,
    conjecture_search,
    distance_bound_check,
    estimate_profile,
    grid_graph,
    is_code_correctable,
    is_graph_correctable,
    path_graph,
    r_division,
    scaling_csv,
    separator,
    verify_k_bound,
    warmup_partition,
)

__version__ = "0.1.0"
