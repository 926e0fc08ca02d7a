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
"""Stabilizer tableau with generator bits packed across machine words."""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from interaction.chain import ChainConfig
from pauli.packing import WORD_BITS, bits_to_int, int_to_bits, word_count
from pauli.rotation import Direction, PauliRotation
from pauli.strings import PauliString
from stabilizer.gf2 import BinaryMatrix, gf2_rank
from utils.errors import ProtocolError, StructuralError

logger = logging.getLogger(__name__)

_ONE = np.uint64(1)
_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)


class TableauInvariantError(ProtocolError):
    """Generators stopped commuting, became dependent, or picked up a complex phase."""


@dataclass
class StabilizerTableau:
    """
    L commuting generators (-1)^s_r P_r stabilizing one pure state.

    Storage is site-major: ``x[s]`` and ``z[s]`` hold, for site s+1, one bit per
    generator (generator r is bit r % 64 of word r // 64). ``signs`` uses the
    same packing. All gates of a layer therefore update every generator with a
    handful of word operations.
    """

    length: int
    x: np.ndarray
    z: np.ndarray
    signs: np.ndarray

    @classmethod
    def initial(cls, length: int) -> "StabilizerTableau":
        """Tableau of |0...0>: generator r is +Z_{r+1}."""
        if length < 1:
            raise StructuralError(f"Tableau length must be positive, got {length}")
        words = word_count(length)
        x = np.zeros((length, words), dtype=np.uint64)
        z = np.zeros((length, words), dtype=np.uint64)
        sites = np.arange(length)
        z[sites, sites // WORD_BITS] = _ONE << (sites % WORD_BITS).astype(np.uint64)
        return cls(length, x, z, np.zeros(words, dtype=np.uint64))

    @classmethod
    def from_generators(cls, generators: Sequence[PauliString]) -> "StabilizerTableau":
        """
        Build from explicit Hermitian generators.

        Raises:
            StructuralError: If lengths differ or a generator is not Hermitian
        """
        if not generators:
            raise StructuralError("Tableau needs at least one generator")
        length = generators[0].length
        if len(generators) != length:
            raise StructuralError(f"{len(generators)} generators for {length} sites")
        words = word_count(length)
        x_bits = np.zeros((length, words * WORD_BITS), dtype=np.uint8)
        z_bits = np.zeros((length, words * WORD_BITS), dtype=np.uint8)
        sign_bits = np.zeros(words * WORD_BITS, dtype=np.uint8)
        for r, generator in enumerate(generators):
            if generator.length != length:
                raise StructuralError(f"Generator {r} has {generator.length} sites, expected {length}")
            sign_bits[r] = 0 if generator.sign > 0 else 1
            x_bits[:, r] = int_to_bits(generator.x_bits, length)
            z_bits[:, r] = int_to_bits(generator.z_bits, length)

        def pack(bits: np.ndarray) -> np.ndarray:
            return np.packbits(bits, axis=-1, bitorder="little").view(np.uint64)

        return cls(length, pack(x_bits), pack(z_bits), pack(sign_bits[None, :])[0])

    def copy(self) -> "StabilizerTableau":
        return StabilizerTableau(self.length, self.x.copy(), self.z.copy(), self.signs.copy())

    def _bit(self, words: np.ndarray, r: int) -> np.ndarray:
        word, bit = divmod(r, WORD_BITS)
        return (words[..., word] >> np.uint64(bit)) & _ONE

    def generator(self, r: int) -> PauliString:
        """Generator r (0-based) as a phase-exact PauliString."""
        if not 0 <= r < self.length:
            raise StructuralError(f"Generator index {r} out of range 0..{self.length - 1}")
        x_bits = bits_to_int(self._bit(self.x, r).astype(np.uint8))
        z_bits = bits_to_int(self._bit(self.z, r).astype(np.uint8))
        phase = 2 * int(self._bit(self.signs, r))
        return PauliString(self.length, x_bits, z_bits, phase)

    @property
    def generators(self) -> List[PauliString]:
        return [self.generator(r) for r in range(self.length)]

    def dump(self) -> str:
        """One generator per line in the ``+XZY`` text form."""
        return "\n".join(str(g) for g in self.generators) + "\n"

    @classmethod
    def load(cls, text: str) -> "StabilizerTableau":
        return cls.from_generators([PauliString.parse(line) for line in text.split()])

    def symplectic_matrix(self, sites: Sequence[int] = ()) -> BinaryMatrix:
        """
        Rows x_s then z_s for the given 1-based sites (all sites by default); columns are generators.
        """
        rows = [s - 1 for s in sites] if sites else list(range(self.length))
        words = np.concatenate([self.x[rows], self.z[rows]], axis=0)
        return BinaryMatrix(2 * len(rows), self.length, words)

    def anticommutation_flags(self, operator: PauliString) -> np.ndarray:
        """Packed flag word per generator: 1 where the generator anticommutes with ``operator``."""
        if operator.length != self.length:
            raise StructuralError(f"Operator has {operator.length} sites, tableau has {self.length}")
        flags = np.zeros_like(self.signs)
        for site in operator.support:
            s = site - 1
            if (operator.z_bits >> s) & 1:
                flags ^= self.x[s]
            if (operator.x_bits >> s) & 1:
                flags ^= self.z[s]
        return flags

    def check_invariants(self) -> None:
        """
        Verify pairwise commutation and GF(2) independence of the generators.

        Raises:
            TableauInvariantError: If either property is violated
        """
        for r in range(self.length):
            x_mask = (_ALL * self._bit(self.x, r))[:, None]
            z_mask = (_ALL * self._bit(self.z, r))[:, None]
            flags = np.bitwise_xor.reduce((self.x & z_mask) ^ (self.z & x_mask), axis=0)
            if np.any(flags):
                raise TableauInvariantError(f"Generator {r} anticommutes with another generator")
        rank = gf2_rank(self.symplectic_matrix())
        if rank != self.length:
            raise TableauInvariantError(f"Generators are dependent: rank {rank} < {self.length}")


def _add(lo: np.ndarray, hi: np.ndarray, bits: np.ndarray) -> None:
    """Bit-sliced counter += bits (mod 4)."""
    hi ^= lo & bits
    lo ^= bits


def _subtract(lo: np.ndarray, hi: np.ndarray, bits: np.ndarray) -> None:
    """Bit-sliced counter -= bits (mod 4), as += 3 * bits."""
    _add(lo, hi, bits)
    hi ^= bits


# Letter of the rotation generator -> (letter gaining +1, letter gaining -1) in R * g
_PRODUCT_SIGNS = {"X": ("Y", "Z"), "Y": ("Z", "X"), "Z": ("X", "Y")}


def _letter_mask(tab: StabilizerTableau, s: int, letter: str) -> np.ndarray:
    x, z = tab.x[s], tab.z[s]
    if letter == "X":
        return x & ~z
    if letter == "Y":
        return x & z
    return z & ~x


def tableau_apply_rotation(
    tab: StabilizerTableau,
    rotation: PauliRotation,
    direction: Direction = Direction.SCHRODINGER,
) -> StabilizerTableau:
    """
    Transport every generator through exp(-i pi/4 P), in place.

    Stabilizers move as g -> U g U^dagger; an anticommuting generator becomes
    -i P g. The phase exponent of that product is accumulated per generator in
    a two-plane mod-4 counter, and the high plane gives the sign flip.

    Args:
        tab: Tableau to update
        rotation: Any Hermitian pi/4 Pauli rotation
        direction: SCHRODINGER for states; HEISENBERG transports the other way

    Returns:
        The same tableau, for chaining
    """
    generator = rotation.generator
    flags = tab.anticommutation_flags(generator)
    if not np.any(flags):
        return tab

    lo = np.zeros_like(flags)
    hi = np.zeros_like(flags)
    constant = (direction.exponent + generator.phase) % 4
    if constant & 1:
        _add(lo, hi, np.full_like(flags, _ALL))
    if constant & 2:
        hi ^= _ALL

    support = generator.support
    for site in support:
        plus, minus = _PRODUCT_SIGNS[generator.letter(site)]
        _add(lo, hi, _letter_mask(tab, site - 1, plus))
        _subtract(lo, hi, _letter_mask(tab, site - 1, minus))

    tab.signs ^= flags & hi
    for site in support:
        s = site - 1
        if (generator.x_bits >> s) & 1:
            tab.x[s] ^= flags
        if (generator.z_bits >> s) & 1:
            tab.z[s] ^= flags
    return tab


def _bond_matchings(cfg: ChainConfig) -> List[Tuple[np.ndarray, np.ndarray]]:
    """Bonds split into two sets of disjoint (0-based) site pairs."""
    first, second = [], []
    for i, j in cfg.bonds():
        (first if i % 2 == 1 and j == i + 1 else second).append((i - 1, j - 1))
    matchings = []
    for bonds in (first, second):
        if bonds:
            sites = np.asarray(bonds, dtype=np.intp)
            matchings.append((sites[:, 0], sites[:, 1]))
    return matchings


def apply_kick(tab: StabilizerTableau, cfg: ChainConfig) -> StabilizerTableau:
    """
    One Floquet kick in place: Z rotations on every site, then every XX bond.

    Under exp(-i pi/4 Z) a generator letter X becomes Y and Y becomes -X. Under
    exp(-i pi/4 X_i X_j) a generator with exactly one Z component on the bond
    gains X_i X_j, and flips sign when that component is a bare Z.
    """
    if tab.length != cfg.length:
        raise StructuralError(f"Tableau has {tab.length} sites, chain has {cfg.length}")
    tab.signs ^= np.bitwise_xor.reduce(tab.x & tab.z, axis=0)
    tab.z ^= tab.x

    for i, j in _bond_matchings(cfg):
        xi, xj, zi, zj = tab.x[i], tab.x[j], tab.z[i], tab.z[j]
        odd = zi ^ zj
        flips = odd & ((zi & ~xi) | (zj & ~xj))
        tab.signs ^= np.bitwise_xor.reduce(flips, axis=0)
        tab.x[i] = xi ^ odd
        tab.x[j] = xj ^ odd
    return tab


def tableau_states(
    n_max: int, cfg: ChainConfig, debug_checks: bool = False
) -> Iterator[Tuple[int, StabilizerTableau]]:
    """
    Yield (n, tableau after n kicks) for n = 0..n_max.

    The same tableau object is advanced in place between yields.
    """
    if n_max < 0:
        raise StructuralError(f"Kick count must be non-negative, got {n_max}")
    tab = StabilizerTableau.initial(cfg.length)
    yield 0, tab
    for n in range(1, n_max + 1):
        apply_kick(tab, cfg)
        if debug_checks:
            tab.check_invariants()
            logger.debug(f"Kick {n}: tableau invariants hold")
        yield n, tab


def tableau_evolve(n: int, cfg: ChainConfig, debug_checks: bool = False) -> StabilizerTableau:
    """
    n kicks applied to the all-zeros tableau.

    Args:
        n: Number of kicks, n >= 0
        cfg: Chain configuration
        debug_checks: Verify generator invariants after every kick

    Returns:
        The evolved tableau
    """
    for _, tab in tableau_states(n, cfg, debug_checks):
        pass
    return tab
