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
"""Dense state vectors with site 1 as the most significant basis bit."""

import json
from dataclasses import dataclass

import numpy as np

from utils.errors import StructuralError
from utils.limits import DENSE_SITE_LIMIT, check_limit

NORM_TOLERANCE = 1e-12


@dataclass
class StateVector:
    """
    2^L complex amplitudes of an L-site chain.

    Basis index bit (L - j) holds site j, so ``|10..0>`` (site 1 up) is index
    2^(L-1). ``|0>`` is the +1 eigenstate of Z.
    """

    length: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != (2**self.length,):
            raise StructuralError(
                f"Expected {2**self.length} amplitudes for L={self.length}, "
                f"got shape {self.amplitudes.shape}"
            )

    @classmethod
    def zero_state(cls, length: int) -> "StateVector":
        """The all-up product state |0...0>."""
        check_limit("dense sites", length, DENSE_SITE_LIMIT)
        amplitudes = np.zeros(2**length, dtype=complex)
        amplitudes[0] = 1.0
        return cls(length, amplitudes)

    @classmethod
    def from_bitstring(cls, bits: str) -> "StateVector":
        """Computational basis state such as ``"0110"`` (site 1 first)."""
        if not bits or set(bits) - {"0", "1"}:
            raise StructuralError(f"Not a bit string: '{bits}'")
        check_limit("dense sites", len(bits), DENSE_SITE_LIMIT)
        amplitudes = np.zeros(2 ** len(bits), dtype=complex)
        amplitudes[int(bits, 2)] = 1.0
        return cls(len(bits), amplitudes)

    def copy(self) -> "StateVector":
        return StateVector(self.length, self.amplitudes.copy())

    def tensor(self) -> np.ndarray:
        """View with one axis per site; axis j-1 is site j."""
        return self.amplitudes.reshape((2,) * self.length)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def check_norm(self, tolerance: float = NORM_TOLERANCE) -> None:
        """
        Raises:
            StructuralError: If the norm drifted from 1 by more than ``tolerance``
        """
        deviation = abs(self.norm() - 1.0)
        if deviation > tolerance:
            raise StructuralError(f"State norm off by {deviation:.3e}")

    def overlap(self, other: "StateVector") -> complex:
        """<self|other>."""
        if other.length != self.length:
            raise StructuralError(f"Length mismatch: {self.length} vs {other.length}")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def distance(self, other: "StateVector") -> float:
        """||self - other||, no global-phase quotient."""
        if other.length != self.length:
            raise StructuralError(f"Length mismatch: {self.length} vs {other.length}")
        return float(np.linalg.norm(self.amplitudes - other.amplitudes))

    def to_json(self) -> str:
        """Amplitudes as ``[[re, im], ...]`` in basis order."""
        pairs = [[float(a.real), float(a.imag)] for a in self.amplitudes]
        return json.dumps(pairs)

    @classmethod
    def from_json(cls, text: str) -> "StateVector":
        pairs = np.asarray(json.loads(text), dtype=float)
        if pairs.ndim != 2 or pairs.shape[1] != 2:
            raise StructuralError("State dump must be a list of [re, im] pairs")
        length = int(pairs.shape[0]).bit_length() - 1
        return cls(length, pairs[:, 0] + 1j * pairs[:, 1])
