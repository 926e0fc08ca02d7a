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
"""Gate kernels and Floquet evolution on dense state vectors."""

import logging
from functools import lru_cache
from typing import Iterable, Tuple

import numpy as np

from dense.state import StateVector
from interaction.chain import Block, ChainConfig
from interaction.layers import gate_layers
from pauli.rotation import PauliRotation
from pauli.strings import PHASE_VALUES, PauliString
from utils.errors import StructuralError
from utils.limits import DENSE_SITE_LIMIT, check_limit

logger = logging.getLogger(__name__)

_SQRT2 = np.sqrt(2.0)


def _basis_mask(bits: int, length: int) -> int:
    """Move site j from bit j-1 (PauliString layout) to bit L-j (basis layout)."""
    return int(format(bits, f"0{length}b")[::-1], 2) if bits else 0


def _parity(values: np.ndarray) -> np.ndarray:
    """Popcount parity of each entry of a non-negative int64 array."""
    values = values.copy()
    for shift in (32, 16, 8, 4, 2, 1):
        values ^= values >> shift
    return values & 1


@lru_cache(maxsize=8)
def _basis_indices(length: int) -> np.ndarray:
    indices = np.arange(2**length, dtype=np.int64)
    indices.setflags(write=False)
    return indices


@lru_cache(maxsize=8)
def _z_layer_diagonal(length: int) -> np.ndarray:
    """Diagonal of prod_j exp(-i pi/4 Z_j): exp(-i pi/4 (L - 2 popcount(b)))."""
    indices = _basis_indices(length)
    popcount = np.zeros(indices.shape, dtype=np.int64)
    for site in range(length):
        popcount += (indices >> site) & 1
    diagonal = np.exp(-0.25j * np.pi * (length - 2 * popcount))
    diagonal.setflags(write=False)
    return diagonal


def _check_length(state: StateVector, length: int) -> None:
    if state.length != length:
        raise StructuralError(f"State has {state.length} sites, operator has {length}")


def apply_pauli_string(state: StateVector, operator: PauliString) -> StateVector:
    """
    P|psi> for a phase-exact Pauli string.

    (P psi)[c] = i^(k + #Y) (-1)^parity((c ^ xm) & zm) psi[c ^ xm] with the
    X and Z masks in basis-bit layout.
    """
    _check_length(state, operator.length)
    xm = _basis_mask(operator.x_bits, operator.length)
    zm = _basis_mask(operator.z_bits, operator.length)
    phase = PHASE_VALUES[(operator.phase + operator.y_count) % 4]

    if xm == 0 and zm == 0:
        return StateVector(state.length, phase * state.amplitudes)
    if zm == 0:
        return StateVector(state.length, phase * _flip(state, operator.x_bits))

    sources = _basis_indices(state.length) ^ xm
    signs = 1 - 2 * _parity(sources & zm)
    return StateVector(state.length, phase * signs * state.amplitudes[sources])


def _flip(state: StateVector, x_bits: int) -> np.ndarray:
    """Amplitudes after X on every site in ``x_bits``: a flip of those tensor axes."""
    axes = tuple(site for site in range(state.length) if (x_bits >> site) & 1)
    return np.flip(state.tensor(), axis=axes).reshape(-1)


def apply_pauli_rotation(state: StateVector, rotation: PauliRotation) -> StateVector:
    """
    exp(-i pi/4 P)|psi> = (|psi> - i P|psi>)/sqrt(2), the sign carried by P.

    Raises:
        StructuralError: If the lengths differ
    """
    rotated = apply_pauli_string(state, rotation.generator)
    return StateVector(state.length, (state.amplitudes - 1j * rotated.amplitudes) / _SQRT2)


def apply_rotations(state: StateVector, rotations: Iterable[PauliRotation]) -> StateVector:
    """Apply rotations in the given (application) order."""
    for rotation in rotations:
        state = apply_pauli_rotation(state, rotation)
    return state


def apply_floquet(state: StateVector, cfg: ChainConfig) -> StateVector:
    """
    One kick: the Z layer on every site first, then every XX bond.

    Raises:
        StructuralError: If the state does not match the chain length
    """
    _check_length(state, cfg.length)
    amplitudes = _z_layer_diagonal(cfg.length) * state.amplitudes
    state = StateVector(cfg.length, amplitudes)
    for i, j in cfg.bonds():
        flipped = _flip(state, (1 << (i - 1)) | (1 << (j - 1)))
        state = StateVector(cfg.length, (state.amplitudes - 1j * flipped) / _SQRT2)
    return state


def evolve(n: int, cfg: ChainConfig) -> StateVector:
    """
    U^n |0...0>.

    Args:
        n: Number of kicks, n >= 0
        cfg: Chain configuration

    Returns:
        The evolved state

    Raises:
        StructuralError: If n is negative
        ResourceLimitError: If L exceeds the dense cap
    """
    for _, state in evolve_states(n, cfg):
        pass
    return state


def evolve_states(n_max: int, cfg: ChainConfig) -> Iterable[Tuple[int, StateVector]]:
    """Yield (n, U^n|0...0>) for n = 0..n_max."""
    if n_max < 0:
        raise StructuralError(f"Kick count must be non-negative, got {n_max}")
    check_limit("dense sites", cfg.length, DENSE_SITE_LIMIT)
    state = StateVector.zero_state(cfg.length)
    yield 0, state
    for n in range(1, n_max + 1):
        state = apply_floquet(state, cfg)
        logger.debug(f"Kick {n}: norm deviation {abs(state.norm() - 1.0):.2e}")
        yield n, state


def apply_block_unitaries(state: StateVector, cfg: ChainConfig, n: int = 1) -> StateVector:
    """U_A^n U_B^n |psi>."""
    _check_length(state, cfg.length)
    layers = gate_layers(cfg)
    for block in (Block.B, Block.A):
        rotations = layers.block_application_order(block)
        for _ in range(n):
            state = apply_rotations(state, rotations)
    return state
