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
"""Reduced density matrices, block entropy and Wootters concurrence."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, Iterator, List, Sequence, Tuple, Union

import numpy as np
from scipy.linalg import eigvalsh, svdvals

from dense.evolution import evolve_states
from dense.state import StateVector
from interaction.chain import ChainConfig
from utils.errors import StructuralError
from utils.limits import RDM_SITE_LIMIT, check_limit

logger = logging.getLogger(__name__)

EIGENVALUE_CLAMP = 1e-12
HERMITIAN_TOLERANCE = 1e-12
TRACE_TOLERANCE = 1e-12
NEGATIVE_EIGENVALUE_TOLERANCE = 1e-10

_YY = np.array([[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=complex)


@dataclass
class DensityMatrix:
    """Reduced state of the retained ``sites``; the first site is the leftmost factor."""

    sites: Tuple[int, ...]
    matrix: np.ndarray

    @property
    def dimension(self) -> int:
        return int(self.matrix.shape[0])

    def eigenvalues(self) -> np.ndarray:
        """Ascending eigenvalues of the Hermitian part."""
        return eigvalsh(0.5 * (self.matrix + self.matrix.conj().T))

    def validate(self) -> None:
        """
        Check Hermiticity, unit trace and positivity.

        Raises:
            StructuralError: If any check fails
        """
        if self.matrix.shape != (2 ** len(self.sites),) * 2:
            raise StructuralError(
                f"Density matrix shape {self.matrix.shape} does not fit {len(self.sites)} sites"
            )
        asymmetry = float(np.max(np.abs(self.matrix - self.matrix.conj().T)))
        if asymmetry > HERMITIAN_TOLERANCE:
            raise StructuralError(f"Density matrix is not Hermitian (deviation {asymmetry:.3e})")
        trace = complex(np.trace(self.matrix))
        if abs(trace - 1.0) > TRACE_TOLERANCE:
            raise StructuralError(f"Density matrix trace is {trace:.6g}, expected 1")
        smallest = float(self.eigenvalues()[0])
        if smallest < -NEGATIVE_EIGENVALUE_TOLERANCE:
            raise StructuralError(f"Density matrix has negative eigenvalue {smallest:.3e}")


def reduced_density_matrix(state: StateVector, sites: Sequence[int]) -> DensityMatrix:
    """
    Partial trace over every site not in ``sites``.

    Args:
        state: Pure state
        sites: Retained 1-based sites, in the order of the output tensor factors

    Returns:
        DensityMatrix on the retained sites

    Raises:
        StructuralError: If ``sites`` is empty, repeated or out of range
        ResourceLimitError: If more than the cap of sites is retained
    """
    sites = tuple(sites)
    if not sites:
        raise StructuralError("Reduced density matrix needs at least one retained site")
    if len(set(sites)) != len(sites) or any(not 1 <= s <= state.length for s in sites):
        raise StructuralError(f"Invalid retained sites {sites} for L={state.length}")
    check_limit("retained sites", len(sites), RDM_SITE_LIMIT)

    kept_axes = [s - 1 for s in sites]
    traced_axes = [axis for axis in range(state.length) if axis not in kept_axes]
    tensor = np.transpose(state.tensor(), kept_axes + traced_axes)
    amplitudes = tensor.reshape(2 ** len(sites), -1)
    return DensityMatrix(sites, amplitudes @ amplitudes.conj().T)


def _schmidt_weights(state: StateVector, block: int) -> np.ndarray:
    """Squared Schmidt coefficients across the cut after site ``block``, clamped."""
    if not 0 <= block <= state.length:
        raise StructuralError(f"Block size {block} out of range 0..{state.length}")
    if block in (0, state.length):
        return np.ones(1)
    weights = svdvals(state.amplitudes.reshape(2**block, -1)) ** 2
    weights[weights < EIGENVALUE_CLAMP] = 0.0
    return weights


def von_neumann_entropy(weights: np.ndarray) -> float:
    """-sum w log2 w with 0 log 0 = 0."""
    positive = weights[weights > 0]
    return float(-np.sum(positive * np.log2(positive)))


def block_entropy(state: StateVector, block: int) -> float:
    """
    Von Neumann entropy in ebits of the first ``block`` sites (block A).

    Eigenvalues of rho_A below 1e-12 are clamped to zero.
    """
    return von_neumann_entropy(_schmidt_weights(state, block))


def entanglement_spectrum(state: StateVector, block: int) -> np.ndarray:
    """Clamped eigenvalues of rho_A, descending (zeros dropped)."""
    weights = np.sort(_schmidt_weights(state, block))[::-1]
    return weights[weights > 0]


def concurrence(rho: Union[DensityMatrix, np.ndarray]) -> float:
    """
    Wootters concurrence of a two-qubit state.

    C = max(0, l1 - l2 - l3 - l4) with l_i the descending square roots of the
    eigenvalues of rho (Y x Y) rho* (Y x Y).

    Raises:
        StructuralError: If rho is not a valid 4x4 density matrix
    """
    if not isinstance(rho, DensityMatrix):
        matrix = np.asarray(rho, dtype=complex)
        if matrix.shape != (4, 4):
            raise StructuralError(f"Concurrence needs a 4x4 matrix, got {matrix.shape}")
        rho = DensityMatrix((1, 2), matrix)
    if rho.dimension != 4:
        raise StructuralError(f"Concurrence needs a two-qubit state, got {len(rho.sites)} sites")
    rho.validate()

    spin_flipped = _YY @ rho.matrix.conj() @ _YY
    eigenvalues = np.linalg.eigvals(rho.matrix @ spin_flipped).real
    roots = np.sort(np.sqrt(np.clip(eigenvalues, 0.0, None)))[::-1]
    value = roots[0] - roots[1] - roots[2] - roots[3]
    return float(min(1.0, max(0.0, value)))


@dataclass(frozen=True)
class ConcurrenceRow:
    site_i: int
    site_j: int
    n: int
    concurrence: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "site_i": self.site_i,
            "site_j": self.site_j,
            "n": self.n,
            "concurrence": self.concurrence,
        }


def scan_pairs(cfg: ChainConfig, all_pairs: bool = False) -> List[Tuple[int, int]]:
    """Mirror pairs (A_j, B_j) by default, every pair i < j with ``all_pairs``."""
    if all_pairs:
        return list(combinations(range(1, cfg.length + 1), 2))
    return cfg.interface_pairs()


def concurrence_scan(
    cfg: ChainConfig, n_max: int, all_pairs: bool = False
) -> Iterator[ConcurrenceRow]:
    """
    Concurrence of each scanned pair for n = 0..n_max on the dense backend.

    Rows come ordered by n, then by pair.

    Raises:
        ResourceLimitError: If L exceeds the dense cap
    """
    pairs = scan_pairs(cfg, all_pairs)
    logger.info(f"Scanning {len(pairs)} pairs for n = 0..{n_max} (L={cfg.length})")
    for n, state in evolve_states(n_max, cfg):
        for i, j in pairs:
            value = concurrence(reduced_density_matrix(state, (i, j)))
            yield ConcurrenceRow(i, j, n, value)
