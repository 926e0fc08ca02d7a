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
"""Word-packed binary matrices with rank and linear solves over GF(2)."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from pauli.packing import WORD_BITS, pack_rows, unpack_rows, word_count
from utils.errors import StructuralError

_ONE = np.uint64(1)


@dataclass
class BinaryMatrix:
    """
    rows x cols bits; row r occupies ``words[r]``, column c is bit c % 64 of word c // 64.

    Padding bits past ``cols`` are always zero.
    """

    rows: int
    cols: int
    words: np.ndarray

    def __post_init__(self) -> None:
        words = np.asarray(self.words, dtype=np.uint64)
        shape = (self.rows, word_count(self.cols))
        if words.size != shape[0] * shape[1]:
            raise StructuralError(f"{self.rows}x{self.cols} bits need {shape} words, got {words.shape}")
        self.words = words.reshape(shape)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls(rows, cols, np.zeros((rows, word_count(cols)), dtype=np.uint64))

    @classmethod
    def from_dense(cls, bits: np.ndarray) -> "BinaryMatrix":
        """Pack a 2-D 0/1 array."""
        bits = np.asarray(bits)
        if bits.ndim != 2:
            raise StructuralError(f"Expected a 2-D bit array, got {bits.ndim} dimensions")
        rows, cols = bits.shape
        return cls(rows, cols, pack_rows(bits & 1))

    def to_dense(self) -> np.ndarray:
        return unpack_rows(self.words, self.cols)

    def copy(self) -> "BinaryMatrix":
        return BinaryMatrix(self.rows, self.cols, self.words.copy())

    def column(self, col: int) -> np.ndarray:
        """Bits of one column as a uint64 0/1 vector."""
        word, bit = divmod(col, WORD_BITS)
        return (self.words[:, word] >> np.uint64(bit)) & _ONE


def _lowest_set_bit(row: np.ndarray) -> int:
    """Column of the lowest set bit of a packed row, or -1 if the row is zero."""
    nonzero = np.flatnonzero(row)
    if nonzero.size == 0:
        return -1
    word = int(nonzero[0])
    value = int(row[word])
    return word * WORD_BITS + (value & -value).bit_length() - 1


def gf2_rank(m: BinaryMatrix) -> int:
    """
    Rank over GF(2).

    Rows are taken in turn; a nonzero row pivots on its lowest set bit, and
    that bit is cleared from every later row.
    """
    # zero rows never pivot; the rank is at most cols
    words = m.words[m.words.any(axis=1)]
    rank = 0
    for r in range(words.shape[0]):
        pivot = _lowest_set_bit(words[r])
        if pivot < 0:
            continue
        rank += 1
        if rank == m.cols:
            break
        word, bit = divmod(pivot, WORD_BITS)
        below = words[r + 1 :]
        hits = ((below[:, word] >> np.uint64(bit)) & _ONE).astype(bool)
        below[hits] ^= words[r]
    return rank


def gf2_solve(a: BinaryMatrix, b: np.ndarray) -> Optional[np.ndarray]:
    """
    One solution x of a x = b over GF(2).

    Args:
        a: Coefficient matrix (rows equations, cols unknowns)
        b: Right-hand side, ``rows`` bits

    Returns:
        0/1 uint8 vector of ``cols`` unknowns (free unknowns set to 0), or None
        if the system is inconsistent

    Raises:
        StructuralError: If ``b`` does not have one bit per row
    """
    b = np.asarray(b, dtype=np.uint8).reshape(-1)
    if b.shape[0] != a.rows:
        raise StructuralError(f"Right-hand side has {b.shape[0]} bits for {a.rows} equations")

    augmented = BinaryMatrix.from_dense(np.concatenate([a.to_dense(), b[:, None]], axis=1))
    words = augmented.words
    pivots = []
    rank = 0
    for col in range(a.cols):
        if rank == a.rows:
            break
        word, bit = divmod(col, WORD_BITS)
        column = ((words[:, word] >> np.uint64(bit)) & _ONE).astype(bool)
        candidates = np.flatnonzero(column[rank:])
        if candidates.size == 0:
            continue
        pivot_row = rank + int(candidates[0])
        if pivot_row != rank:
            words[[rank, pivot_row]] = words[[pivot_row, rank]]
            column[[rank, pivot_row]] = column[[pivot_row, rank]]
        column[rank] = False
        words[column] ^= words[rank]
        pivots.append(col)
        rank += 1

    rhs = augmented.column(a.cols)
    if np.any(rhs[rank:]):
        return None
    solution = np.zeros(a.cols, dtype=np.uint8)
    for row, col in enumerate(pivots):
        solution[col] = rhs[row]
    return solution
