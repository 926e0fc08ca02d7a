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
"""Chain geometry: length, boundary condition and the A/B block labelling."""

from enum import Enum
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from utils.errors import StructuralError

Bond = Tuple[int, int]


class Boundary(str, Enum):
    """Boundary condition of the chain."""

    OPEN = "open"
    CLOSED = "closed"


class Block(str, Enum):
    """Bipartition block."""

    A = "A"
    B = "B"


class ChainConfig(BaseModel):
    """
    A spin chain of L sites cut into blocks A (sites 1..M) and B (sites M+1..L).

    Block labels are a view on the physical sites: A_j is site M+1-j and B_j is
    site M+j, so A_1 and B_1 face each other across the cut.
    """

    model_config = ConfigDict(frozen=True)

    length: int = Field(description="Number of sites L (even, at least 4)")
    boundary: Boundary = Field(default=Boundary.OPEN, description="Boundary condition")
    block_size_a: int = Field(description="Size M of block A, 1 <= M <= L/2")

    @field_validator("length")
    @classmethod
    def validate_length(cls, v):
        """Validate chain length."""
        if v < 4 or v % 2:
            raise ValueError(f"Chain length must be even and at least 4, got {v}")
        return v

    @model_validator(mode="after")
    def validate_block_size(self):
        """Validate the block split."""
        if not 1 <= self.block_size_a <= self.length // 2:
            raise ValueError(
                f"Block size M must satisfy 1 <= M <= L/2 = {self.length // 2}, "
                f"got {self.block_size_a}"
            )
        return self

    @classmethod
    def equal_blocks(cls, length: int, boundary: Boundary = Boundary.OPEN) -> "ChainConfig":
        return cls(length=length, boundary=boundary, block_size_a=length // 2)

    @property
    def block_size_b(self) -> int:
        return self.length - self.block_size_a

    @property
    def is_equal_blocks(self) -> bool:
        return self.block_size_a == self.block_size_b

    @property
    def is_closed(self) -> bool:
        return self.boundary == Boundary.CLOSED

    @property
    def entropy_period(self) -> int:
        """Kick period of the block-entropy profile: L (open) or L/2 (closed)."""
        return self.length // 2 if self.is_closed else self.length

    def block_size(self, block: Block) -> int:
        return self.block_size_a if block == Block.A else self.block_size_b

    def site(self, block: Block, j: int) -> int:
        """
        Physical site of label A_j or B_j.

        Raises:
            StructuralError: If j is outside the block
        """
        size = self.block_size(block)
        if not 1 <= j <= size:
            raise StructuralError(f"Label {block.value}{j} outside block of size {size}")
        m = self.block_size_a
        return m + 1 - j if block == Block.A else m + j

    def a_site(self, j: int) -> int:
        return self.site(Block.A, j)

    def b_site(self, j: int) -> int:
        return self.site(Block.B, j)

    def label(self, site: int) -> str:
        """Block label ("A3", "B1", ...) of a physical site."""
        self.check_site(site)
        m = self.block_size_a
        return f"A{m + 1 - site}" if site <= m else f"B{site - m}"

    def block_of(self, site: int) -> Block:
        self.check_site(site)
        return Block.A if site <= self.block_size_a else Block.B

    def block_sites(self, block: Block) -> Tuple[int, ...]:
        """Physical sites of a block, ascending."""
        if block == Block.A:
            return tuple(range(1, self.block_size_a + 1))
        return tuple(range(self.block_size_a + 1, self.length + 1))

    def check_site(self, site: int) -> None:
        if not 1 <= site <= self.length:
            raise StructuralError(f"Site {site} out of range 1..{self.length}")

    def bonds(self) -> List[Bond]:
        """Interaction bonds: L-1 for open chains, L for closed (site L+1 is site 1)."""
        bonds = [(s, s + 1) for s in range(1, self.length)]
        if self.is_closed:
            bonds.append((self.length, 1))
        return bonds

    def interface_bonds(self) -> List[Bond]:
        """Bonds joining block A to block B."""
        return [bond for bond in self.bonds() if self.block_of(bond[0]) != self.block_of(bond[1])]

    def block_bonds(self, block: Block) -> List[Bond]:
        """Bonds with both ends inside one block."""
        return [
            bond
            for bond in self.bonds()
            if self.block_of(bond[0]) == block and self.block_of(bond[1]) == block
        ]

    def interface_pairs(self) -> List[Bond]:
        """Mirror pairs (A_j, B_j) as physical (site_i, site_j), for j up to min(M, N)."""
        return sorted(
            (self.a_site(j), self.b_site(j))
            for j in range(1, min(self.block_size_a, self.block_size_b) + 1)
        )
