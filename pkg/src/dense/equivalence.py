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
"""Check |psi_n> = U_A^n U_B^n prod V_i |0> against direct evolution."""

import logging
from dataclasses import dataclass
from typing import Optional

from dense.evolution import apply_block_unitaries, apply_rotations, evolve
from dense.ladder import bell_ladder_state
from dense.state import StateVector
from interaction.chain import ChainConfig
from interaction.operators import interaction_operators
from utils.errors import NotCoveredError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EquivalenceResult:
    """Residuals of the interaction-picture reconstruction at kick n."""

    n: int
    evolution_residual: float
    ladder_residual: Optional[float]


def interaction_picture_state(n: int, cfg: ChainConfig) -> StateVector:
    """prod_{i<=n} V_i |0...0> with V_1 applied first."""
    state = StateVector.zero_state(cfg.length)
    for operator in interaction_operators(n, cfg):
        state = apply_rotations(state, operator.factors)
    return state


def interaction_picture_equivalence(n: int, cfg: ChainConfig) -> EquivalenceResult:
    """
    Compare evolve(n) with U_A^n U_B^n prod V_i |0> and prod V_i |0> with the Bell ladder.

    Args:
        n: Number of kicks, n >= 0
        cfg: Chain configuration

    Returns:
        EquivalenceResult; ``ladder_residual`` is None where no ladder construction exists

    Raises:
        ResourceLimitError: If L exceeds the dense cap
    """
    interaction_state = interaction_picture_state(n, cfg)
    reconstructed = apply_block_unitaries(interaction_state, cfg, n)
    evolution_residual = evolve(n, cfg).distance(reconstructed)

    try:
        ladder_residual: Optional[float] = bell_ladder_state(n, cfg).distance(interaction_state)
    except NotCoveredError:
        ladder_residual = None

    logger.debug(
        f"n={n}: evolution residual {evolution_residual:.3e}, ladder residual {ladder_residual}"
    )
    return EquivalenceResult(n, evolution_residual, ladder_residual)
