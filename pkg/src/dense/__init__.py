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
"""Exact state-vector backend."""

from dense.analysis import (
    DensityMatrix,
    block_entropy,
    concurrence,
    concurrence_scan,
    entanglement_spectrum,
    reduced_density_matrix,
)
from dense.channel import pauli_channel_check
from dense.equivalence import interaction_picture_equivalence
from dense.evolution import apply_floquet, apply_pauli_rotation, evolve
from dense.ladder import bell_ladder_state
from dense.state import StateVector

__all__ = [
    "DensityMatrix",
    "StateVector",
    "apply_floquet",
    "apply_pauli_rotation",
    "bell_ladder_state",
    "block_entropy",
    "concurrence",
    "concurrence_scan",
    "entanglement_spectrum",
    "evolve",
    "interaction_picture_equivalence",
    "pauli_channel_check",
    "reduced_density_matrix",
]
