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
"""Heisenberg transport P -> U^dagger P U through kick layers."""

from typing import Sequence, Tuple

from interaction.chain import Block, Bond, ChainConfig
from interaction.layers import Layer, gate_layers, xx_rotation, z_rotation
from pauli.rotation import Direction, conjugate_by_rotation
from pauli.strings import PauliString
from utils.errors import StructuralError


def _check_site(operator: PauliString, site: int) -> None:
    if not 1 <= site <= operator.length:
        raise StructuralError(f"Site {site} out of range 1..{operator.length}")


def conjugate_by_z_rotation(operator: PauliString, site: int) -> PauliString:
    """
    U^dagger P U for U = exp(-i pi/4 Z_site).

    X -> -Y and Y -> X at the site; Z and I are unchanged.
    """
    _check_site(operator, site)
    return conjugate_by_rotation(operator, z_rotation(operator.length, site))


def conjugate_by_xx_rotation(operator: PauliString, bond: Bond) -> PauliString:
    """
    U^dagger P U for U = exp(-i pi/4 X_i X_j).

    Raises:
        StructuralError: If the bond is degenerate or out of range
    """
    for site in bond:
        _check_site(operator, site)
    return conjugate_by_rotation(operator, xx_rotation(operator.length, bond))


def conjugate_by_product(
    operator: PauliString,
    layers: Sequence[Layer],
    direction: Direction = Direction.HEISENBERG,
) -> PauliString:
    """
    Transport through U = F_1 F_2 ... F_k given in operator-product order.

    Heisenberg transport peels F_1 first; Schrodinger transport starts at F_k.
    """
    ordered = layers if direction == Direction.HEISENBERG else tuple(reversed(layers))
    for layer in ordered:
        for rotation in layer:
            operator = conjugate_by_rotation(operator, rotation, direction)
    return operator


def conjugate_by_block_unitary(
    operator: PauliString, block: Block, cfg: ChainConfig
) -> PauliString:
    """
    U_blk^dagger P U_blk with U_blk = X_blkblk Z_blk.

    Raises:
        StructuralError: If the operator length does not match the chain
    """
    if operator.length != cfg.length:
        raise StructuralError(f"Operator has {operator.length} sites, chain has {cfg.length}")
    return conjugate_by_product(operator, gate_layers(cfg).block_product(block))


def conjugate_by_block_unitaries(
    operators: Tuple[PauliString, ...], cfg: ChainConfig
) -> Tuple[PauliString, ...]:
    """One step of V_n = U_A^dagger U_B^dagger V_{n-1} U_A U_B for each factor."""
    layers = gate_layers(cfg)
    step = layers.block_product(Block.A) + layers.block_product(Block.B)
    return tuple(conjugate_by_product(operator, step) for operator in operators)
