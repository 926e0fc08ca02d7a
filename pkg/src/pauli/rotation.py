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
"""Pi/4 Pauli rotations and the conjugation primitive shared by both pictures."""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from pauli.strings import PauliString, commutes, pauli_mul, to_matrix
from utils.errors import StructuralError


class Direction(str, Enum):
    """Transport direction of a conjugation by U = exp(-i pi/4 P)."""

    HEISENBERG = "heisenberg"  # Q -> U^dagger Q U
    SCHRODINGER = "schrodinger"  # Q -> U Q U^dagger

    @property
    def exponent(self) -> int:
        """Power of i multiplying P*Q when Q anticommutes with P."""
        return 1 if self is Direction.HEISENBERG else 3


@dataclass(frozen=True)
class PauliRotation:
    """exp(-i pi/4 P) for a Hermitian Pauli string P; the sign of P is its phase."""

    generator: PauliString

    def __post_init__(self) -> None:
        if not self.generator.is_hermitian:
            raise StructuralError(
                f"Rotation generator must have phase +1 or -1, got {self.generator}"
            )

    @property
    def length(self) -> int:
        return self.generator.length

    @property
    def sign(self) -> int:
        return self.generator.sign

    def inverse(self) -> "PauliRotation":
        """exp(+i pi/4 P), written as a rotation about -P."""
        return PauliRotation(-self.generator)

    def to_matrix(self) -> np.ndarray:
        """Dense operator (1 - iP)/sqrt(2)."""
        generator = to_matrix(self.generator)
        return (np.eye(generator.shape[0], dtype=complex) - 1j * generator) / np.sqrt(2)

    def conjugate(
        self, operator: PauliString, direction: Direction = Direction.HEISENBERG
    ) -> PauliString:
        return conjugate_by_rotation(operator, self, direction)

    def __str__(self) -> str:
        return f"exp(-i pi/4 {self.generator})"


def conjugate_by_rotation(
    operator: PauliString,
    rotation: PauliRotation,
    direction: Direction = Direction.HEISENBERG,
) -> PauliString:
    """
    Transport a Pauli string through a pi/4 rotation.

    Commuting strings are returned unchanged. An anticommuting Q maps to
    i P Q (Heisenberg, U^dagger Q U) or -i P Q (Schrodinger, U Q U^dagger).

    Args:
        operator: String Q being transported
        rotation: Rotation U = exp(-i pi/4 P)
        direction: Transport direction

    Returns:
        The transported string, phase-exact

    Raises:
        StructuralError: If the lengths differ
    """
    if commutes(operator, rotation.generator):
        return operator
    return pauli_mul(rotation.generator, operator).scaled(direction.exponent)
