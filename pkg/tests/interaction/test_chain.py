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
"""Tests for chain geometry and block labels."""

import pytest
from pydantic import ValidationError

from interaction.chain import Block, Boundary, ChainConfig
from utils.errors import StructuralError


class TestChainConfig:
    """Tests for ChainConfig validation."""

    def test_equal_blocks(self):
        """Test the equal-block constructor."""
        chain = ChainConfig.equal_blocks(8)

        assert chain.block_size_a == 4
        assert chain.block_size_b == 4
        assert chain.is_equal_blocks
        assert not chain.is_closed

    def test_odd_length_rejected(self):
        """Test odd chain lengths are rejected."""
        with pytest.raises(ValidationError):
            ChainConfig(length=7, block_size_a=3)

    def test_block_larger_than_half_rejected(self):
        """Test M above L/2 is rejected."""
        with pytest.raises(ValidationError):
            ChainConfig(length=8, block_size_a=5)

    def test_entropy_period(self):
        """Test the period is L open and L/2 closed."""
        assert ChainConfig.equal_blocks(20).entropy_period == 20
        assert ChainConfig.equal_blocks(20, Boundary.CLOSED).entropy_period == 10


class TestLabels:
    """Tests for the block-label view of physical sites."""

    def test_sites_face_the_cut(self):
        """Test A_1 and B_1 sit on either side of the cut."""
        chain = ChainConfig(length=6, block_size_a=2)

        assert chain.a_site(1) == 2
        assert chain.a_site(2) == 1
        assert chain.b_site(1) == 3
        assert chain.b_site(4) == 6

    def test_label_inverse_of_site(self):
        """Test label() inverts site()."""
        chain = ChainConfig(length=10, block_size_a=3)

        for site in range(1, 11):
            label = chain.label(site)
            block = Block(label[0])
            assert chain.site(block, int(label[1:])) == site

    def test_label_outside_block(self):
        """Test a label beyond the block is rejected."""
        with pytest.raises(StructuralError):
            ChainConfig(length=6, block_size_a=2).a_site(3)

    def test_block_sites(self):
        """Test block A is the left end of the chain."""
        chain = ChainConfig(length=6, block_size_a=2)

        assert chain.block_sites(Block.A) == (1, 2)
        assert chain.block_sites(Block.B) == (3, 4, 5, 6)


class TestBonds:
    """Tests for bond enumeration."""

    def test_open_bonds(self):
        """Test L-1 nearest-neighbour bonds on an open chain."""
        chain = ChainConfig.equal_blocks(4)

        assert chain.bonds() == [(1, 2), (2, 3), (3, 4)]
        assert chain.interface_bonds() == [(2, 3)]

    def test_closed_bonds(self):
        """Test the wrap-around bond crosses the cut too."""
        chain = ChainConfig.equal_blocks(4, Boundary.CLOSED)

        assert chain.bonds()[-1] == (4, 1)
        assert chain.interface_bonds() == [(2, 3), (4, 1)]

    def test_block_bonds(self):
        """Test bonds inside each block."""
        chain = ChainConfig(length=6, block_size_a=2)

        assert chain.block_bonds(Block.A) == [(1, 2)]
        assert chain.block_bonds(Block.B) == [(3, 4), (4, 5), (5, 6)]

    def test_interface_pairs(self):
        """Test mirror pairs stop at the smaller block."""
        chain = ChainConfig(length=6, block_size_a=2)

        assert chain.interface_pairs() == [(1, 4), (2, 3)]
