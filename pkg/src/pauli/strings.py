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
"""Phase-exact Pauli strings in the binary symplectic representation."""

import re
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Mapping, Tuple

import numpy as np

from utils.errors import StructuralError
from utils.limits import MATRIX_SITE_LIMIT, check_limit

# (x_bit, z_bit) -> letter
LETTERS: Dict[Tuple[int, int], str] = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
BITS: Dict[str, Tuple[int, int]] = {letter: bits for bits, letter in LETTERS.items()}

PHASE_PREFIXES = ("+", "+i", "-", "-i")
PHASE_VALUES = (1, 1j, -1, -1j)

LETTER_MATRICES: Dict[str, np.ndarray] = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

_TEXT_PATTERN = re.compile(r"^([+-]i?)?([IXYZ]+)$")


def _popcount(value: int) -> int:
    return bin(value).count("1")


@dataclass(frozen=True)
class PauliString:
    """
    A Pauli string i^phase * P_1 ... P_L.

    Site j (1-based, left to right) lives in bit j-1 of ``x_bits`` and ``z_bits``.
    The letter at a site is read from its (x, z) bit pair: (0,0)=I, (1,0)=X,
    (1,1)=Y, (0,1)=Z. Instances are immutable and hashable.
    """

    length: int
    x_bits: int = 0
    z_bits: int = 0
    phase: int = 0

    def __post_init__(self) -> None:
        if self.length < 1:
            raise StructuralError(f"Pauli string length must be positive, got {self.length}")
        limit = 1 << self.length
        for name, bits in (("x_bits", self.x_bits), ("z_bits", self.z_bits)):
            if bits < 0 or bits >= limit:
                raise StructuralError(f"{name} has bits outside {self.length} sites")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, length: int) -> "PauliString":
        """Identity string on ``length`` sites."""
        return cls(length)

    @classmethod
    def from_letters(cls, letters: str, phase: int = 0) -> "PauliString":
        """Build from a letter word such as ``"XIZY"`` (site 1 first)."""
        if not letters:
            raise StructuralError("Pauli string needs at least one letter")
        x_bits = 0
        z_bits = 0
        for offset, letter in enumerate(letters):
            if letter not in BITS:
                raise StructuralError(f"Unknown Pauli letter '{letter}'")
            x, z = BITS[letter]
            x_bits |= x << offset
            z_bits |= z << offset
        return cls(len(letters), x_bits, z_bits, phase)

    @classmethod
    def from_sites(
        cls, length: int, letters: Mapping[int, str], phase: int = 0
    ) -> "PauliString":
        """
        Build from a sparse site -> letter mapping.

        Args:
            length: Number of sites L
            letters: Mapping from 1-based site to letter
            phase: Exponent k of the global phase i^k

        Returns:
            The Pauli string

        Raises:
            StructuralError: If a site is out of range or a letter is unknown
        """
        x_bits = 0
        z_bits = 0
        for site, letter in letters.items():
            if not 1 <= site <= length:
                raise StructuralError(f"Site {site} out of range 1..{length}")
            if letter not in BITS:
                raise StructuralError(f"Unknown Pauli letter '{letter}'")
            x, z = BITS[letter]
            x_bits |= x << (site - 1)
            z_bits |= z << (site - 1)
        return cls(length, x_bits, z_bits, phase)

    @classmethod
    def parse(cls, text: str) -> "PauliString":
        """
        Parse the text form ``"+iYZIIX"``.

        Raises:
            StructuralError: If the text is not a sign-phase prefix followed by letters
        """
        match = _TEXT_PATTERN.match(text.strip().replace("−", "-"))
        if not match:
            raise StructuralError(f"Cannot parse Pauli string '{text}'")
        prefix = match.group(1) or "+"
        return cls.from_letters(match.group(2), PHASE_PREFIXES.index(prefix))

    def letter(self, site: int) -> str:
        """Letter at a 1-based site."""
        if not 1 <= site <= self.length:
            raise StructuralError(f"Site {site} out of range 1..{self.length}")
        shift = site - 1
        return LETTERS[((self.x_bits >> shift) & 1, (self.z_bits >> shift) & 1)]

    @property
    def letters(self) -> str:
        return "".join(self.letter(site) for site in range(1, self.length + 1))

    @property
    def support(self) -> Tuple[int, ...]:
        """Sites carrying a non-identity letter, ascending."""
        bits = self.x_bits | self.z_bits
        return tuple(site for site in range(1, self.length + 1) if (bits >> (site - 1)) & 1)

    @property
    def weight(self) -> int:
        return _popcount(self.x_bits | self.z_bits)

    @property
    def y_count(self) -> int:
        return _popcount(self.x_bits & self.z_bits)

    @property
    def is_hermitian(self) -> bool:
        return self.phase % 2 == 0

    @property
    def sign(self) -> int:
        """+1 or -1 for a Hermitian string."""
        if not self.is_hermitian:
            raise StructuralError(f"{self} has a non-real phase")
        return 1 if self.phase == 0 else -1

    def scaled(self, exponent: int) -> "PauliString":
        """Multiply by i^exponent."""
        return PauliString(self.length, self.x_bits, self.z_bits, self.phase + exponent)

    def unsigned(self) -> "PauliString":
        """Same letters with phase +1."""
        return PauliString(self.length, self.x_bits, self.z_bits, 0)

    def restricted(self, sites: Tuple[int, ...]) -> "PauliString":
        """Letters at ``sites`` (in the given order) as a shorter string, phase kept."""
        return PauliString.from_letters("".join(self.letter(site) for site in sites), self.phase)

    def __neg__(self) -> "PauliString":
        return self.scaled(2)

    def __mul__(self, other: "PauliString") -> "PauliString":
        return pauli_mul(self, other)

    def __str__(self) -> str:
        return f"{PHASE_PREFIXES[self.phase]}{self.letters}"


def _check_lengths(p: PauliString, q: PauliString) -> None:
    if p.length != q.length:
        raise StructuralError(f"Length mismatch: {p.length} vs {q.length}")


def pauli_mul(p: PauliString, q: PauliString) -> PauliString:
    """
    Phase-exact product PQ.

    Symplectic bits combine by XOR. Each site contributes +1, -1 or 0 to the
    exponent of i according to the single-qubit table (XY = iZ, YZ = iX, ZX = iY
    and their reverses with -i).

    Raises:
        StructuralError: If the lengths differ
    """
    _check_lengths(p, q)
    x1, z1, x2, z2 = p.x_bits, p.z_bits, q.x_bits, q.z_bits
    y1 = x1 & z1
    x_only = x1 & ~z1
    z_only = z1 & ~x1
    plus = (y1 & z2 & ~x2) | (x_only & x2 & z2) | (z_only & x2 & ~z2)
    minus = (y1 & x2 & ~z2) | (x_only & z2 & ~x2) | (z_only & x2 & z2)
    phase = p.phase + q.phase + _popcount(plus) - _popcount(minus)
    return PauliString(p.length, x1 ^ x2, z1 ^ z2, phase)


def commutes(p: PauliString, q: PauliString) -> bool:
    """
    True iff PQ = QP, i.e. the symplectic inner product vanishes mod 2.

    Raises:
        StructuralError: If the lengths differ
    """
    _check_lengths(p, q)
    return _popcount((p.x_bits & q.z_bits) ^ (p.z_bits & q.x_bits)) % 2 == 0


def to_matrix(p: PauliString) -> np.ndarray:
    """
    Dense 2^L x 2^L matrix of the string, site 1 as the leftmost tensor factor.

    Raises:
        ResourceLimitError: If L exceeds the small-L matrix cap
    """
    check_limit("matrix sites", p.length, MATRIX_SITE_LIMIT)
    factors = [LETTER_MATRICES[letter] for letter in p.letters]
    return PHASE_VALUES[p.phase] * reduce(np.kron, factors)
