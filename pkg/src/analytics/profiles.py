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
"""
Closed-form entropy profiles and concurrence predictions.

At odd multiples of L/2 kicks an open chain is a product of Bell pairs on
every mirror pair (j, L + 1 - j); the revival is not confined to the central
pair.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from dense.analysis import block_entropy
from dense.evolution import evolve_states
from interaction.chain import ChainConfig
from stabilizer.measures import tableau_block_entropy
from stabilizer.tableau import tableau_states
from utils.errors import NotCoveredError, StructuralError

logger = logging.getLogger(__name__)


class Source(str, Enum):
    """Provenance of an entropy value."""

    DENSE = "dense"
    STABILIZER = "stabilizer"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class EntropyPoint:
    n: int
    entropy: float
    source: Source


@dataclass
class EntropyProfile:
    """S_M(n) versus kick count for one chain and one source."""

    cfg: ChainConfig
    points: List[EntropyPoint] = field(default_factory=list)

    def values(self) -> List[float]:
        return [point.entropy for point in self.points]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "length": self.cfg.length,
            "boundary": self.cfg.boundary.value,
            "block": self.cfg.block_size_a,
            "points": [
                {"n": p.n, "entropy": p.entropy, "source": p.source.value} for p in self.points
            ],
        }


def entropy_closed_form(cfg: ChainConfig, n: int) -> int:
    """
    Sawtooth block entropy in ebits after n kicks.

    Open chains rise 1 ebit per kick to M, hold until n = N and fall to 0 at
    n = L; the profile repeats with period L. Closed chains move 2 ebits per
    kick with period L/2.

    Raises:
        StructuralError: If n is negative
        NotCoveredError: For closed chains with odd M
    """
    if n < 0:
        raise StructuralError(f"Kick count must be non-negative, got {n}")
    m = cfg.block_size_a
    cap = min(m, cfg.block_size_b)
    reduced = n % cfg.entropy_period
    if cfg.is_closed:
        if m % 2:
            raise NotCoveredError(f"No closed-chain entropy formula for odd M={m}")
        return min(2 * reduced, cap, cfg.length - 2 * reduced)
    return min(reduced, cap, cfg.length - reduced)


def heaviside(x: float, at_zero: float = 1.0) -> float:
    """Step function with a selectable value at 0."""
    if x > 0:
        return 1.0
    if x < 0:
        return 0.0
    return at_zero


def entropy_formula_verbatim(cfg: ChainConfig, n: int, theta_zero: float = 1.0) -> float:
    """
    The printed equal-block entropy formulas evaluated as written.

    Open: n + (M - n) T(n - M) T(2M - n). Closed: 2n + (M - 2n) T(n - M/2) T(M - n).
    n is not reduced by the period.

    Raises:
        NotCoveredError: Unless the blocks are equal
    """
    if not cfg.is_equal_blocks:
        raise NotCoveredError("The printed formulas are stated for M = L/2 only")
    m = cfg.block_size_a
    if cfg.is_closed:
        return 2 * n + (m - 2 * n) * heaviside(n - m / 2, theta_zero) * heaviside(m - n, theta_zero)
    return n + (m - n) * heaviside(n - m, theta_zero) * heaviside(2 * m - n, theta_zero)


def concurrence_prediction(cfg: ChainConfig, pair: Tuple[int, int], n: int) -> float:
    """
    Predicted concurrence of a pair after n kicks.

    Closed chains stay at 0. On open chains every mirror pair (j, L + 1 - j)
    is a Bell pair exactly when n is an odd multiple of L/2, so C = 1 there
    and 0 otherwise. The kick does not depend on the block split, so neither
    does the prediction.
    """
    if cfg.is_closed:
        return 0.0
    i, j = sorted(pair)
    if i + j != cfg.length + 1:
        return 0.0
    half = cfg.length // 2
    return 1.0 if n % cfg.length == half else 0.0


def entropy_profile(
    cfg: ChainConfig,
    n_max: int,
    source: Source = Source.STABILIZER,
    debug_checks: bool = False,
) -> EntropyProfile:
    """
    S_M(n) for n = 0..n_max from one source.

    Raises:
        ResourceLimitError: For the dense source beyond the dense cap
        NotCoveredError: For the closed-form source where no formula exists
    """
    m = cfg.block_size_a
    profile = EntropyProfile(cfg)
    if source == Source.CLOSED_FORM:
        for n in range(n_max + 1):
            profile.points.append(EntropyPoint(n, entropy_closed_form(cfg, n), source))
    elif source == Source.DENSE:
        for n, state in evolve_states(n_max, cfg):
            profile.points.append(EntropyPoint(n, block_entropy(state, m), source))
    else:
        for n, tab in tableau_states(n_max, cfg, debug_checks):
            profile.points.append(EntropyPoint(n, tableau_block_entropy(tab, m), source))
    logger.info(
        f"Entropy profile L={cfg.length} M={m} {cfg.boundary.value} from {source.value}: "
        f"peak {max(profile.values())} ebits"
    )
    return profile


def closed_form_or_none(cfg: ChainConfig, n: int) -> Optional[int]:
    """entropy_closed_form, or None where no formula exists."""
    try:
        return entropy_closed_form(cfg, n)
    except NotCoveredError:
        return None
