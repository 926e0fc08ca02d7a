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
"""Bell-ladder reference states built directly from pair factors."""

from functools import reduce
from typing import List, Sequence, Tuple

import numpy as np

from dense.state import StateVector
from interaction.chain import ChainConfig
from utils.errors import NotCoveredError, StructuralError
from utils.limits import DENSE_SITE_LIMIT, check_limit

_SQRT2 = np.sqrt(2.0)

# Pair produced by V_1 = exp(-i pi/4 Y Y) on |00>: (|00> + i|11>)/sqrt2
BELL_PAIR = np.array([1, 0, 0, 1j], dtype=complex) / _SQRT2

# Pairs as printed in the derivation text
PRINTED_BELL_PAIR = np.array([1, 0, 0, -1j], dtype=complex) / _SQRT2
PRINTED_BELL_PAIR_PRIME = np.array([0, 1, -1j, 0], dtype=complex) / _SQRT2

# X_A Z_B applied to BELL_PAIR: (|10> - i|01>)/sqrt2
_FLIPPED_PAIR = np.array([0, -1j, 1, 0], dtype=complex) / _SQRT2

# (A_M, B_M, B_{M+1}) after V_{M+1} with unequal blocks
TRIPLET = np.zeros(8, dtype=complex)
TRIPLET[0b000] = 0.5
TRIPLET[0b110] = 0.5j
TRIPLET[0b101] = 0.5
TRIPLET[0b011] = -0.5j

# Z_{B_M} Z_{B_{M+1}} applied to TRIPLET
_TRIPLET_PHASED = np.zeros(8, dtype=complex)
_TRIPLET_PHASED[0b000] = 0.5
_TRIPLET_PHASED[0b110] = -0.5j
_TRIPLET_PHASED[0b101] = -0.5
_TRIPLET_PHASED[0b011] = -0.5j

_UP = np.array([1, 0], dtype=complex)
_DOWN = np.array([0, 1], dtype=complex)

# (A_{M-1}, B_{M-1}, A_M, B_M, B_{M+1}, B_{M+2}) after V_{M+2} with unequal blocks
SEXTET = (
    reduce(np.kron, [BELL_PAIR, TRIPLET, _UP])
    + reduce(np.kron, [_FLIPPED_PAIR, _TRIPLET_PHASED, _DOWN])
) / _SQRT2

Factor = Tuple[Tuple[int, ...], np.ndarray]


def place_factors(length: int, factors: Sequence[Factor]) -> StateVector:
    """
    Product state of the given factors; unlisted sites are |0>.

    Args:
        length: Number of sites L
        factors: (sites, amplitudes) pairs; the first listed site is the most
            significant bit of the factor's own basis

    Returns:
        The placed state

    Raises:
        StructuralError: If a site is repeated or out of range
    """
    check_limit("dense sites", length, DENSE_SITE_LIMIT)
    order: List[int] = []
    vectors = []
    for sites, amplitudes in factors:
        if len(amplitudes) != 2 ** len(sites):
            raise StructuralError(f"Factor on {len(sites)} sites has {len(amplitudes)} amplitudes")
        order.extend(sites)
        vectors.append(amplitudes)
    if len(set(order)) != len(order) or any(not 1 <= s <= length for s in order):
        raise StructuralError(f"Invalid factor sites {order} for L={length}")
    for site in range(1, length + 1):
        if site not in order:
            order.append(site)
            vectors.append(_UP)

    tensor = reduce(np.kron, vectors).reshape((2,) * length)
    axes = np.argsort(np.asarray(order) - 1)
    return StateVector(length, np.transpose(tensor, axes).reshape(-1))


def _pair_factors(cfg: ChainConfig, count: int) -> List[Factor]:
    return [((cfg.a_site(j), cfg.b_site(j)), BELL_PAIR) for j in range(1, count + 1)]


def bell_ladder_state(n: int, cfg: ChainConfig) -> StateVector:
    """
    prod_{i<=n} V_i |0...0> written down directly, without evolution.

    Coverage on open chains: 0 <= n <= M gives n pairs on (A_j, B_j). Equal
    blocks add n = M+1, where the last pair has returned to |00>. Unequal
    blocks add n = M+1 (three-spin factor on A_M, B_M, B_{M+1}) and, for
    M >= 2, n = M+2 (six-spin factor reaching B_{M+2}).

    Raises:
        StructuralError: If n is negative
        NotCoveredError: Outside the coverage above, and for closed chains with n > 0
    """
    if n < 0:
        raise StructuralError(f"Kick count must be non-negative, got {n}")
    m = cfg.block_size_a
    if n == 0:
        return StateVector.zero_state(cfg.length)
    if cfg.is_closed:
        raise NotCoveredError("No Bell-ladder construction for closed chains")
    if n <= m:
        return place_factors(cfg.length, _pair_factors(cfg, n))
    if n == m + 1:
        if cfg.is_equal_blocks:
            return place_factors(cfg.length, _pair_factors(cfg, m - 1))
        triplet_sites = (cfg.a_site(m), cfg.b_site(m), cfg.b_site(m + 1))
        return place_factors(cfg.length, _pair_factors(cfg, m - 1) + [(triplet_sites, TRIPLET)])
    if n == m + 2 and not cfg.is_equal_blocks and m >= 2:
        sextet_sites = (
            cfg.a_site(m - 1),
            cfg.b_site(m - 1),
            cfg.a_site(m),
            cfg.b_site(m),
            cfg.b_site(m + 1),
            cfg.b_site(m + 2),
        )
        return place_factors(cfg.length, _pair_factors(cfg, m - 2) + [(sextet_sites, SEXTET)])
    raise NotCoveredError(f"No Bell-ladder construction for n={n} with M={m}, N={cfg.block_size_b}")


def printed_pair_mismatch() -> float:
    """Distance between the printed Bell pair and the pair V_1 produces."""
    return float(np.linalg.norm(PRINTED_BELL_PAIR - BELL_PAIR))
