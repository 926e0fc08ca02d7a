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
"""Pair reduced state as a local Pauli channel acting on a Bell pair (L=4)."""

import logging
from dataclasses import dataclass
from typing import Collection, List, Sequence

import numpy as np

from dense.analysis import reduced_density_matrix
from dense.evolution import evolve
from dense.ladder import BELL_PAIR
from interaction.chain import ChainConfig
from utils.errors import StructuralError

logger = logging.getLogger(__name__)

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_QUARTER_Z = np.diag([np.exp(-0.25j * np.pi), np.exp(0.25j * np.pi)])

CENTRAL_PAIR = (2, 3)


@dataclass(frozen=True)
class KrausTerm:
    """One term p * (Q_A x Q_B) rho (Q_A x Q_B)^dagger."""

    probability: float
    operator_a: np.ndarray
    operator_b: np.ndarray

    def operator(self) -> np.ndarray:
        return np.kron(self.operator_a, self.operator_b)


def central_pair_channel() -> List[KrausTerm]:
    """
    Kraus terms for the central pair (2, 3) of the L=4 chain after one kick.

    Q_1 = exp(-i pi/4 Z) on each spin; the other three terms add X on spin 2,
    on spin 3, and on both. Each term has p = 1/4.
    """
    q1 = _QUARTER_Z
    flipped = _X @ q1
    return [
        KrausTerm(0.25, q1, q1),
        KrausTerm(0.25, flipped, q1),
        KrausTerm(0.25, q1, flipped),
        KrausTerm(0.25, flipped, flipped),
    ]


def bell_density_matrix() -> np.ndarray:
    return np.outer(BELL_PAIR, BELL_PAIR.conj())


def apply_channel(rho: np.ndarray, terms: Sequence[KrausTerm]) -> np.ndarray:
    """sum_k p_k Q_k rho Q_k^dagger."""
    result = np.zeros_like(rho, dtype=complex)
    for term in terms:
        operator = term.operator()
        result += term.probability * operator @ rho @ operator.conj().T
    return result


def drop_terms(terms: Sequence[KrausTerm], dropped: Collection[int]) -> List[KrausTerm]:
    """Remove the terms at the given 1-based positions and renormalise the probabilities."""
    kept = [term for index, term in enumerate(terms, start=1) if index not in dropped]
    if not kept:
        raise StructuralError("Cannot drop every Kraus term")
    total = sum(term.probability for term in kept)
    return [KrausTerm(t.probability / total, t.operator_a, t.operator_b) for t in kept]


def pauli_channel_check(cfg: ChainConfig, dropped: Collection[int] = ()) -> float:
    """
    Rebuild rho_23 after one kick from the Kraus sum on the Bell pair.

    Args:
        cfg: Must be the open L=4 chain
        dropped: 1-based Kraus terms to remove (negative control)

    Returns:
        Max-entry deviation from the partial-trace rho_23 of U|0000>

    Raises:
        StructuralError: For any chain other than open L=4
    """
    if cfg.length != 4 or cfg.is_closed:
        raise StructuralError("The Kraus decomposition is tabulated for the open L=4 chain only")
    terms = drop_terms(central_pair_channel(), dropped) if dropped else central_pair_channel()
    reconstructed = apply_channel(bell_density_matrix(), terms)
    direct = reduced_density_matrix(evolve(1, cfg), CENTRAL_PAIR).matrix
    residual = float(np.max(np.abs(reconstructed - direct)))
    logger.debug(f"Kraus reconstruction with terms dropped {sorted(dropped)}: {residual:.3e}")
    return residual
