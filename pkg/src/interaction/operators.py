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
"""Interaction-picture operators V_n: recursion, closed forms and decimation table."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple

from interaction.chain import Block, ChainConfig
from interaction.conjugation import conjugate_by_product
from interaction.layers import gate_layers
from pauli.rotation import PauliRotation
from pauli.strings import PHASE_PREFIXES, PauliString, pauli_mul
from utils.errors import NotCoveredError, StructuralError

logger = logging.getLogger(__name__)

Label = Tuple[Block, int]


@dataclass(frozen=True)
class InteractionOperator:
    """V_n as a product of commuting pi/4 rotations (one factor open, two closed)."""

    n: int
    factors: Tuple[PauliRotation, ...]

    @property
    def generators(self) -> Tuple[PauliString, ...]:
        return tuple(rotation.generator for rotation in self.factors)

    @property
    def generator(self) -> PauliString:
        """The single generator of an open-chain V_n."""
        if len(self.factors) != 1:
            raise StructuralError(f"V_{self.n} has {len(self.factors)} factors")
        return self.factors[0].generator

    def __str__(self) -> str:
        return " * ".join(str(rotation) for rotation in self.factors)


def interaction_operators(n_max: int, cfg: ChainConfig) -> Iterator[InteractionOperator]:
    """
    Yield V_1 .. V_{n_max} by repeated Heisenberg transport.

    V_n is the interface bond layer X_AB carried n times through U_A U_B,
    so V_1 = exp(-i pi/4 Y_A1 Y_B1) and V_n = U_A^dagger U_B^dagger V_{n-1} U_A U_B.
    """
    layers = gate_layers(cfg)
    step = layers.block_product(Block.A) + layers.block_product(Block.B)
    generators = tuple(rotation.generator for rotation in layers.x_ab)
    for n in range(1, n_max + 1):
        generators = tuple(conjugate_by_product(g, step) for g in generators)
        logger.debug(f"V_{n}: {', '.join(str(g) for g in generators)}")
        yield InteractionOperator(n, tuple(PauliRotation(g) for g in generators))


def interaction_operator_recursive(n: int, cfg: ChainConfig) -> InteractionOperator:
    """
    V_n computed by the conjugation recursion.

    Args:
        n: Kick index, n >= 1
        cfg: Chain configuration

    Returns:
        InteractionOperator; closed chains carry one factor per interface bond

    Raises:
        StructuralError: If n < 1
    """
    if n < 1:
        raise StructuralError(f"V_n is defined for n >= 1, got {n}")
    operator = None
    for operator in interaction_operators(n, cfg):
        pass
    return operator


def _labelled(cfg: ChainConfig, letters: Mapping[Label, str]) -> PauliString:
    return PauliString.from_sites(
        cfg.length, {cfg.site(block, j): letter for (block, j), letter in letters.items()}
    )


def _z_ladder(upto: int) -> Dict[Label, str]:
    """Z on A_j and B_j for j = 1..upto."""
    letters: Dict[Label, str] = {}
    for j in range(1, upto + 1):
        letters[(Block.A, j)] = "Z"
        letters[(Block.B, j)] = "Z"
    return letters


def _rising_generator(cfg: ChainConfig, n: int) -> PauliString:
    letters = _z_ladder(n - 1)
    letters[(Block.A, n)] = "Y"
    letters[(Block.B, n)] = "Y"
    return _labelled(cfg, letters)


def _decimated_generator(cfg: ChainConfig, k: int) -> PauliString:
    m = cfg.block_size_a
    letters = _z_ladder(m - k)
    letters[(Block.A, m - k + 1)] = "X"
    letters[(Block.B, m - k + 1)] = "X"
    return _labelled(cfg, letters)


def _unequal_generator(cfg: ChainConfig, n: int) -> PauliString:
    m = cfg.block_size_a
    if n == m + 1:
        letters = _z_ladder(m - 1)
        letters[(Block.A, m)] = "X"
        letters[(Block.B, m)] = "Z"
        letters[(Block.B, m + 1)] = "Y"
        return _labelled(cfg, letters)
    if n == m + 2 and m >= 2:
        letters = _z_ladder(m - 2)
        letters[(Block.A, m - 1)] = "X"
        letters[(Block.B, m - 1)] = "Z"
        letters[(Block.B, m)] = "Z"
        letters[(Block.B, m + 1)] = "Z"
        letters[(Block.B, m + 2)] = "Y"
        return _labelled(cfg, letters)
    raise NotCoveredError(f"No closed form for V_{n} with unequal blocks M={m}")


def interaction_operator_closed_form(n: int, cfg: ChainConfig) -> InteractionOperator:
    """
    V_n from the closed forms.

    Equal blocks (open chain) cover every n, reduced into 1..L: Y_An Y_Bn with a
    Z ladder below for n <= M, then the decimating X_A X_B strings up to
    V_L = exp(-i pi/4 X_A1 X_B1). Unequal blocks cover n <= M+2.

    Raises:
        StructuralError: If n < 1
        NotCoveredError: For closed chains and for unequal-block n outside coverage
    """
    if n < 1:
        raise StructuralError(f"V_n is defined for n >= 1, got {n}")
    if cfg.is_closed:
        raise NotCoveredError("Closed-chain V_n has no closed form; use the recursion")

    m = cfg.block_size_a
    if cfg.is_equal_blocks:
        reduced = (n - 1) % cfg.length + 1
        if reduced <= m:
            generator = _rising_generator(cfg, reduced)
        else:
            generator = _decimated_generator(cfg, reduced - m)
    elif n <= m:
        generator = _rising_generator(cfg, n)
    else:
        generator = _unequal_generator(cfg, n)
    return InteractionOperator(n, (PauliRotation(generator),))


@dataclass(frozen=True)
class DecimationRow:
    """One step k of the post-peak decimation, V_{M+k}."""

    k: int
    n: int
    recursion: PauliString
    symmetric: PauliString
    printed: Optional[PauliString]

    @property
    def symmetric_matches(self) -> bool:
        return self.symmetric == self.recursion

    @property
    def printed_matches(self) -> bool:
        return self.printed == self.recursion

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "n": self.n,
            "recursion": str(self.recursion),
            "symmetric": str(self.symmetric),
            "printed": str(self.printed) if self.printed is not None else None,
            "symmetric_matches": self.symmetric_matches,
            "printed_matches": self.printed_matches,
        }


def _printed_decimation_string(cfg: ChainConfig, k: int) -> Optional[PauliString]:
    """A^x_{M-k+1} B^x_{M-k} A^z_{M-k} B^z_{M-k} ... A^z_1 B^z_1, multiplied as written."""
    m = cfg.block_size_a
    if m - k < 1:
        return None
    factors = [((Block.A, m - k + 1), "X"), ((Block.B, m - k), "X")]
    for j in range(m - k, 0, -1):
        factors.append(((Block.A, j), "Z"))
        factors.append(((Block.B, j), "Z"))
    product = PauliString.identity(cfg.length)
    for label, letter in factors:
        product = pauli_mul(product, _labelled(cfg, {label: letter}))
    return product


def decimation_table(cfg: ChainConfig) -> List[DecimationRow]:
    """
    Compare two candidate decimation strings against the recursion for k = 1..M.

    Raises:
        NotCoveredError: Unless the chain is open with equal blocks
    """
    if cfg.is_closed or not cfg.is_equal_blocks:
        raise NotCoveredError("The decimation table needs an open chain with equal blocks")
    m = cfg.block_size_a
    operators = list(interaction_operators(2 * m, cfg))
    rows = []
    for k in range(1, m + 1):
        rows.append(
            DecimationRow(
                k=k,
                n=m + k,
                recursion=operators[m + k - 1].generator,
                symmetric=_decimated_generator(cfg, k),
                printed=_printed_decimation_string(cfg, k),
            )
        )
    return rows


def describe_operator(operator: PauliString, cfg: ChainConfig) -> str:
    """Compact labelled form, e.g. ``+YZZY on (A2,A1,B1,B2)``."""
    support = operator.support
    prefix = PHASE_PREFIXES[operator.phase]
    if not support:
        return f"{prefix}I"
    letters = "".join(operator.letter(site) for site in support)
    labels = ",".join(cfg.label(site) for site in support)
    return f"{prefix}{letters} on ({labels})"


def operator_records(
    operator: InteractionOperator, cfg: ChainConfig
) -> List[Dict[str, Any]]:
    """JSON records {n, factor, sign, string, labels} for each factor of V_n."""
    records = []
    for index, generator in enumerate(operator.generators, start=1):
        records.append(
            {
                "n": operator.n,
                "factor": index,
                "sign": "+" if generator.sign > 0 else "-",
                "string": generator.letters,
                "labels": describe_operator(generator, cfg),
            }
        )
    return records
