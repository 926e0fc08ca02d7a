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
"""Tests for gate layers and Heisenberg transport through them."""

import pytest

from interaction.chain import Block, Boundary, ChainConfig
from interaction.conjugation import (
    conjugate_by_block_unitaries,
    conjugate_by_block_unitary,
    conjugate_by_product,
    conjugate_by_xx_rotation,
    conjugate_by_z_rotation,
)
from interaction.layers import gate_layers, xx_rotation, z_rotation
from pauli.rotation import Direction
from pauli.strings import PauliString
from utils.errors import StructuralError


def test_gate_layers_open():
    """Test the layer contents of the open L=4 chain."""
    layers = gate_layers(ChainConfig.equal_blocks(4))

    assert [str(r.generator) for r in layers.x_ab] == ["+IXXI"]
    assert [str(r.generator) for r in layers.x_aa] == ["+XXII"]
    assert [str(r.generator) for r in layers.x_bb] == ["+IIXX"]
    assert len(layers.z_a) == 2
    assert len(layers.z_b) == 2


def test_gate_layers_closed_interface():
    """Test the closed chain has two interface bonds."""
    layers = gate_layers(ChainConfig.equal_blocks(4, Boundary.CLOSED))

    assert [str(r.generator) for r in layers.x_ab] == ["+IXXI", "+XIIX"]


def test_application_order_starts_with_z():
    """Test the Z layers act first on a state."""
    order = gate_layers(ChainConfig.equal_blocks(4)).application_order()

    assert all(r.generator.letters.count("Z") == 1 for r in order[:4])
    assert order[-1].generator.letters == "IXXI"


def test_degenerate_bond():
    """Test a bond joining a site to itself is rejected."""
    with pytest.raises(StructuralError):
        xx_rotation(4, (2, 2))


def test_z_rotation_maps_x_to_minus_y():
    """Test X -> -Y and Y -> X under exp(-i pi/4 Z)."""
    assert str(conjugate_by_z_rotation(PauliString.parse("X"), 1)) == "-Y"
    assert str(conjugate_by_z_rotation(PauliString.parse("Y"), 1)) == "+X"
    assert str(conjugate_by_z_rotation(PauliString.parse("Z"), 1)) == "+Z"


def test_xx_rotation_on_z():
    """Test Z_1 -> i X_1 X_2 Z_1 = Y_1 X_2."""
    image = conjugate_by_xx_rotation(PauliString.parse("ZI"), (1, 2))

    assert str(image) == "+YX"


def test_xx_rotation_site_out_of_range():
    """Test a bond beyond the operator is rejected."""
    with pytest.raises(StructuralError):
        conjugate_by_xx_rotation(PauliString.parse("ZI"), (2, 3))


def test_product_directions_invert():
    """Test Schrodinger transport undoes Heisenberg transport."""
    chain = ChainConfig(length=6, block_size_a=2)
    layers = gate_layers(chain).product_order()
    operator = PauliString.parse("XZIYZX")

    forward = conjugate_by_product(operator, layers, Direction.HEISENBERG)

    assert conjugate_by_product(forward, layers, Direction.SCHRODINGER) == operator


def test_block_unitary_leaves_other_block():
    """Test U_A does not touch operators supported on block B."""
    chain = ChainConfig.equal_blocks(4)
    operator = PauliString.parse("IIXZ")

    assert conjugate_by_block_unitary(operator, Block.A, chain) == operator


def test_block_unitary_length_mismatch():
    """Test the operator must span the chain."""
    with pytest.raises(StructuralError):
        conjugate_by_block_unitary(PauliString.parse("XX"), Block.A, ChainConfig.equal_blocks(4))


def test_block_unitaries_step():
    """Test one transport step turns X_A1 X_B1 into Y_A1 Y_B1 on L=4."""
    chain = ChainConfig.equal_blocks(4)

    (image,) = conjugate_by_block_unitaries((PauliString.parse("IXXI"),), chain)

    assert str(image) == "+IYYI"


def test_z_rotation_helper():
    """Test the Z rotation generator."""
    assert z_rotation(3, 2).generator.letters == "IZI"
