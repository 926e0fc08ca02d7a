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
"""Entropy, Pauli expectations and pair states read off a stabilizer tableau."""

import logging
from itertools import product
from typing import Iterator

import numpy as np

from dense.analysis import ConcurrenceRow, DensityMatrix, concurrence, scan_pairs
from dense.evolution import apply_pauli_string
from dense.state import StateVector
from interaction.chain import ChainConfig
from pauli.packing import int_to_bits
from pauli.strings import LETTER_MATRICES, PauliString, pauli_mul
from stabilizer.gf2 import gf2_rank, gf2_solve
from stabilizer.tableau import StabilizerTableau, tableau_states
from utils.errors import StructuralError

logger = logging.getLogger(__name__)


def tableau_block_entropy(tab: StabilizerTableau, block: int) -> int:
    """
    Entropy in ebits of the first ``block`` sites.

    S = rank(generators restricted to the block) - |block|, evaluated on the
    smaller side of the cut.

    Raises:
        StructuralError: Unless 1 <= block < L
    """
    if not 1 <= block < tab.length:
        raise StructuralError(f"Block size must satisfy 1 <= M < {tab.length}, got {block}")
    if block <= tab.length - block:
        sites = tuple(range(1, block + 1))
    else:
        sites = tuple(range(block + 1, tab.length + 1))
    return gf2_rank(tab.symplectic_matrix(sites)) - len(sites)


def pauli_expectation(tab: StabilizerTableau, operator: PauliString) -> int:
    """
    <P> on the stabilizer state: +1, -1 or 0.

    Zero when P anticommutes with some generator. Otherwise +-P lies in the
    stabilizer group; the GF(2) combination of generators producing its
    letters fixes the sign.

    Raises:
        StructuralError: If P is not Hermitian or the lengths differ
    """
    if not operator.is_hermitian:
        raise StructuralError(f"Expectation needs a Hermitian Pauli string, got {operator}")
    if np.any(tab.anticommutation_flags(operator)):
        return 0

    target = np.concatenate(
        [int_to_bits(operator.x_bits, tab.length), int_to_bits(operator.z_bits, tab.length)]
    )
    coefficients = gf2_solve(tab.symplectic_matrix(), target)
    if coefficients is None:
        raise StructuralError(f"{operator} commutes with every generator but is not generated")

    product_string = PauliString.identity(tab.length)
    for r in np.flatnonzero(coefficients):
        product_string = pauli_mul(product_string, tab.generator(int(r)))
    return 1 if product_string.phase == operator.phase else -1


def tableau_two_qubit_rdm(tab: StabilizerTableau, i: int, j: int) -> DensityMatrix:
    """
    rho_ij = (1/4) sum over the 16 two-site Paulis of <P> P.

    Raises:
        StructuralError: If i == j or a site is out of range
    """
    if i == j:
        raise StructuralError(f"Pair needs two distinct sites, got ({i}, {j})")
    for site in (i, j):
        if not 1 <= site <= tab.length:
            raise StructuralError(f"Site {site} out of range 1..{tab.length}")

    matrix = np.zeros((4, 4), dtype=complex)
    for first, second in product("IXYZ", repeat=2):
        operator = PauliString.from_sites(tab.length, {i: first, j: second})
        value = pauli_expectation(tab, operator)
        if value:
            matrix += value * np.kron(LETTER_MATRICES[first], LETTER_MATRICES[second])
    return DensityMatrix((i, j), matrix / 4)


def tableau_state_fidelity(tab: StabilizerTableau, state: StateVector) -> float:
    """<psi| prod_g (1 + g)/2 |psi>, i.e. |<stabilizer state|psi>|^2."""
    if state.length != tab.length:
        raise StructuralError(f"State has {state.length} sites, tableau has {tab.length}")
    projected = state
    for generator in tab.generators:
        flipped = apply_pauli_string(projected, generator)
        projected = StateVector(state.length, 0.5 * (projected.amplitudes + flipped.amplitudes))
    return float(state.overlap(projected).real)


def tableau_concurrence_scan(
    cfg: ChainConfig, n_max: int, all_pairs: bool = False, debug_checks: bool = False
) -> Iterator[ConcurrenceRow]:
    """
    Pair concurrences for n = 0..n_max read off the tableau, for chains beyond the dense cap.

    Rows come ordered by n, then by pair.
    """
    pairs = scan_pairs(cfg, all_pairs)
    logger.info(f"Scanning {len(pairs)} pairs for n = 0..{n_max} on the tableau (L={cfg.length})")
    for n, tab in tableau_states(n_max, cfg, debug_checks):
        for i, j in pairs:
            yield ConcurrenceRow(i, j, n, concurrence(tableau_two_qubit_rdm(tab, i, j)))
