# Copyright 2025 John Brosnihan
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
"""Stabilizer-tableau backend for large chains."""

from stabilizer.gf2 import BinaryMatrix, gf2_rank, gf2_solve
from stabilizer.measures import (
    pauli_expectation,
    tableau_block_entropy,
    tableau_concurrence_scan,
    tableau_state_fidelity,
    tableau_two_qubit_rdm,
)
from stabilizer.tableau import (
    StabilizerTableau,
    TableauInvariantError,
    apply_kick,
    tableau_apply_rotation,
    tableau_evolve,
    tableau_states,
)

__all__ = [
    "BinaryMatrix",
    "StabilizerTableau",
    "TableauInvariantError",
    "apply_kick",
    "gf2_rank",
    "gf2_solve",
    "pauli_expectation",
    "tableau_apply_rotation",
    "tableau_block_entropy",
    "tableau_concurrence_scan",
    "tableau_evolve",
    "tableau_states",
    "tableau_two_qubit_rdm",
    "tableau_state_fidelity",
]
