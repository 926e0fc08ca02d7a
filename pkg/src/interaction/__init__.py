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
"""Chain geometry, gate layers and the interaction-picture operators V_n."""

from interaction.chain import Block, Boundary, ChainConfig
from interaction.conjugation import (
    conjugate_by_block_unitary,
    conjugate_by_xx_rotation,
    conjugate_by_z_rotation,
)
from interaction.layers import GateLayerSpec, gate_layers
from interaction.operators import (
    InteractionOperator,
    decimation_table,
    describe_operator,
    interaction_operator_closed_form,
    interaction_operator_recursive,
    interaction_operators,
    operator_records,
)

__all__ = [
    "Block",
    "Boundary",
    "ChainConfig",
    "GateLayerSpec",
    "InteractionOperator",
    "conjugate_by_block_unitary",
    "conjugate_by_xx_rotation",
    "conjugate_by_z_rotation",
    "decimation_table",
    "describe_operator",
    "gate_layers",
    "interaction_operator_closed_form",
    "interaction_operator_recursive",
    "interaction_operators",
    "operator_records",
]
