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
"""Tests for the Bell-ladder reference states."""

import numpy as np
import pytest

from dense.equivalence import interaction_picture_state
from dense.ladder import (
    BELL_PAIR,
    SEXTET,
    TRIPLET,
    bell_ladder_state,
    place_factors,
    printed_pair_mismatch,
)
from dense.state import StateVector
from interaction.chain import Boundary, ChainConfig
from utils.errors import NotCoveredError, StructuralError

# (L, M, n) inside ladder coverage
COVERED = [
    (4, 2, 1),
    (4, 2, 2),
    (4, 2, 3),
    (8, 4, 3),
    (8, 4, 5),
    (6, 2, 2),
    (6, 2, 3),
    (6, 2, 4),
    (8, 3, 4),
    (8, 3, 5),
    (10, 2, 4),
]


class TestPlaceFactors:
    """Tests for placing factors on sites."""

    def test_pair_on_central_sites(self):
        """Test a pair on (2, 3) lands on the right basis indices."""
        state = place_factors(4, [((2, 3), BELL_PAIR)])

        assert state.amplitudes[0b0000] == pytest.approx(BELL_PAIR[0])
        assert state.amplitudes[0b0110] == pytest.approx(BELL_PAIR[3])

    def test_reversed_site_order(self):
        """Test the first listed site is the factor's leading qubit."""
        up_down = np.array([0, 1, 0, 0], dtype=complex)

        state = place_factors(3, [((3, 1), up_down)])

        assert state.distance(StateVector.from_bitstring("100")) == 0

    def test_repeated_site_rejected(self):
        """Test overlapping factors are rejected."""
        with pytest.raises(StructuralError):
            place_factors(4, [((1, 2), BELL_PAIR), ((2, 3), BELL_PAIR)])

    def test_amplitude_count_checked(self):
        """Test a factor must have 2^k amplitudes."""
        with pytest.raises(StructuralError):
            place_factors(4, [((1, 2), np.ones(2))])


class TestBellLadder:
    """Tests for the directly written ladder states."""

    @pytest.mark.parametrize("factor", [BELL_PAIR, TRIPLET, SEXTET])
    def test_factors_normalised(self, factor):
        """Test every ladder factor has unit norm."""
        assert np.linalg.norm(factor) == pytest.approx(1.0)

    @pytest.mark.parametrize("length,block,n", COVERED)
    def test_matches_interaction_product(self, length, block, n):
        """Test the ladder equals prod V_i|0...0> inside its coverage."""
        chain = ChainConfig(length=length, block_size_a=block)

        ladder = bell_ladder_state(n, chain)

        assert ladder.distance(interaction_picture_state(n, chain)) < 1e-10

    def test_first_pair_straddles_cut(self):
        """Test one kick leaves the Bell pair on (A_1, B_1) = sites (2, 3)."""
        chain = ChainConfig.equal_blocks(4)

        expected = place_factors(4, [((2, 3), BELL_PAIR)])

        assert interaction_picture_state(1, chain).distance(expected) < 1e-12

    def test_closed_chain_initial_state(self):
        """Test n=0 is covered for closed chains."""
        chain = ChainConfig.equal_blocks(6, Boundary.CLOSED)

        assert bell_ladder_state(0, chain).distance(StateVector.zero_state(6)) == 0

    def test_closed_chain_not_covered(self):
        """Test closed chains have no ladder past n=0."""
        with pytest.raises(NotCoveredError):
            bell_ladder_state(1, ChainConfig.equal_blocks(6, Boundary.CLOSED))

    @pytest.mark.parametrize(
        "length,block,n",
        [(8, 4, 6), (4, 2, 4), (10, 5, 7), (8, 4, 8), (8, 3, 6), (6, 1, 3)],
    )
    def test_outside_coverage(self, length, block, n):
        """Test kicks beyond the written constructions are not covered."""
        with pytest.raises(NotCoveredError):
            bell_ladder_state(n, ChainConfig(length=length, block_size_a=block))

    def test_negative_kicks_rejected(self):
        """Test a negative kick count is rejected."""
        with pytest.raises(StructuralError):
            bell_ladder_state(-1, ChainConfig.equal_blocks(4))


def test_printed_pair_differs_by_sqrt_two():
    """Test the printed pair with -i is off by sqrt 2 from the simulated pair."""
    assert printed_pair_mismatch() == pytest.approx(np.sqrt(2))
