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
"""Gate layers of one kick: U = X_AB X_AA X_BB Z_A Z_B."""

from dataclasses import dataclass
from typing import Tuple

from interaction.chain import Block, Bond, ChainConfig
from pauli.rotation import PauliRotation
from pauli.strings import PauliString
from utils.errors import StructuralError

Layer = Tuple[PauliRotation, ...]


def z_rotation(length: int, site: int) -> PauliRotation:
    """exp(-i pi/4 Z_site)."""
    return PauliRotation(PauliString.from_sites(length, {site: "Z"}))


def xx_rotation(length: int, bond: Bond) -> PauliRotation:
    """
    exp(-i pi/4 X_i X_j).

    Raises:
        StructuralError: If the bond is degenerate or out of range
    """
    i, j = bond
    if i == j:
        raise StructuralError(f"Bond ({i}, {j}) joins a site to itself")
    return PauliRotation(PauliString.from_sites(length, {i: "X", j: "X"}))


@dataclass(frozen=True)
class GateLayerSpec:
    """
    The five commuting-rotation layers of the Floquet map.

    Layers are listed in operator-product order (leftmost first). Rotations
    inside one layer commute, so their internal order is irrelevant.
    """

    x_ab: Layer
    x_aa: Layer
    x_bb: Layer
    z_a: Layer
    z_b: Layer

    def product_order(self) -> Tuple[Layer, ...]:
        """Layers as written in U = X_AB X_AA X_BB Z_A Z_B."""
        return (self.x_ab, self.x_aa, self.x_bb, self.z_a, self.z_b)

    def application_order(self) -> Layer:
        """All rotations in the order they act on a state: Z layers first."""
        return tuple(rot for layer in reversed(self.product_order()) for rot in layer)

    def block_product(self, block: Block) -> Tuple[Layer, ...]:
        """U_A = X_AA Z_A or U_B = X_BB Z_B in operator-product order."""
        if block == Block.A:
            return (self.x_aa, self.z_a)
        return (self.x_bb, self.z_b)

    def block_application_order(self, block: Block) -> Layer:
        return tuple(rot for layer in reversed(self.block_product(block)) for rot in layer)


def gate_layers(cfg: ChainConfig) -> GateLayerSpec:
    """
    Decompose the kick of a chain into its gate layers.

    Args:
        cfg: Chain configuration

    Returns:
        GateLayerSpec; for closed chains X_AB holds both interface bonds
    """
    length = cfg.length
    return GateLayerSpec(
        x_ab=tuple(xx_rotation(length, bond) for bond in cfg.interface_bonds()),
        x_aa=tuple(xx_rotation(length, bond) for bond in cfg.block_bonds(Block.A)),
        x_bb=tuple(xx_rotation(length, bond) for bond in cfg.block_bonds(Block.B)),
        z_a=tuple(z_rotation(length, site) for site in cfg.block_sites(Block.A)),
        z_b=tuple(z_rotation(length, site) for site in cfg.block_sites(Block.B)),
    )
