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
"""Conversions between integer bit words, bit arrays and packed uint64 words."""

import numpy as np

WORD_BITS = 64


def word_count(bits: int) -> int:
    """Number of uint64 words needed to hold ``bits`` bits."""
    return (bits + WORD_BITS - 1) // WORD_BITS


def int_to_bits(value: int, length: int) -> np.ndarray:
    """Unpack the low ``length`` bits of ``value`` into a uint8 array, bit 0 first."""
    raw = value.to_bytes((length + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:length]


def bits_to_int(bits: np.ndarray) -> int:
    """Inverse of :func:`int_to_bits`."""
    packed = np.packbits(np.asarray(bits, dtype=np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def pack_rows(bits: np.ndarray) -> np.ndarray:
    """
    Pack a 2-D 0/1 array into uint64 words along the last axis.

    Column c lands in word c // 64, bit c % 64. Padding bits are zero.
    """
    bits = np.asarray(bits, dtype=np.uint8)
    rows, cols = bits.shape
    padded = np.zeros((rows, word_count(cols) * WORD_BITS), dtype=np.uint8)
    padded[:, :cols] = bits
    return np.packbits(padded, axis=-1, bitorder="little").view(np.uint64)


def unpack_rows(words: np.ndarray, cols: int) -> np.ndarray:
    """Inverse of :func:`pack_rows`, returning a (rows, cols) uint8 array."""
    words = np.ascontiguousarray(words, dtype=np.uint64)
    return np.unpackbits(words.view(np.uint8), axis=-1, bitorder="little")[:, :cols]
