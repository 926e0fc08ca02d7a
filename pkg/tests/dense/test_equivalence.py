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
"""Tests for the interaction-picture reconstruction."""

import pytest

from dense.equivalence import interaction_picture_equivalence
from interaction.chain import Boundary, ChainConfig

CHAINS = [
    ChainConfig.equal_blocks(4),
    ChainConfig.equal_blocks(6),
    ChainConfig(length=8, block_size_a=3),
    ChainConfig.equal_blocks(4, Boundary.CLOSED),
    ChainConfig(length=8, boundary=Boundary.CLOSED, block_size_a=2),
]


@pytest.mark.parametrize("chain", CHAINS, ids=str)
def test_block_unitaries_restore_evolution(chain):
    """Test U^n|0> = U_A^n U_B^n prod V_i|0> over two periods."""
    for n in range(2 * chain.length + 1):
        result = interaction_picture_equivalence(n, chain)

        assert result.n == n
        assert result.evolution_residual < 1e-10


def test_ladder_residual_inside_coverage():
    """Test the ladder residual is reported and small where a ladder exists."""
    chain = ChainConfig.equal_blocks(6)

    residuals = [interaction_picture_equivalence(n, chain).ladder_residual for n in range(6)]

    assert all(r is not None and r < 1e-10 for r in residuals[:5])
    assert residuals[5] is None


def test_closed_chain_has_no_ladder():
    """Test closed chains report no ladder residual past n=0."""
    chain = ChainConfig.equal_blocks(4, Boundary.CLOSED)

    assert interaction_picture_equivalence(0, chain).ladder_residual == 0
    assert interaction_picture_equivalence(1, chain).ladder_residual is None
