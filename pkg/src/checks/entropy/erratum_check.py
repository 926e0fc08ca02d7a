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
"""Printed equal-block entropy formulas against the sawtooth and simulation."""

import logging
from typing import Any, Dict, List

from analytics.profiles import entropy_closed_form, entropy_formula_verbatim
from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from interaction.chain import Boundary, ChainConfig
from stabilizer.measures import tableau_block_entropy
from stabilizer.tableau import tableau_states

logger = logging.getLogger(__name__)

REFERENCE_LENGTH = 20
TOLERANCE = 1e-9


def _compare_chain(chain: ChainConfig, theta_zero: float) -> Dict[str, Any]:
    """One period of printed, sawtooth and simulated entropies."""
    m = chain.block_size_a
    divergences: List[Dict[str, Any]] = []
    oracle_failures: List[int] = []
    for n, tab in tableau_states(chain.entropy_period, chain):
        simulated = tableau_block_entropy(tab, m)
        sawtooth = entropy_closed_form(chain, n)
        verbatim = entropy_formula_verbatim(chain, n, theta_zero)
        if sawtooth != simulated:
            oracle_failures.append(n)
        if abs(verbatim - simulated) >= TOLERANCE:
            divergences.append({"n": n, "verbatim": verbatim, "simulated": simulated})
    logger.debug(
        f"Erratum L={chain.length} {chain.boundary.value}: "
        f"{len(divergences)} divergences, {len(oracle_failures)} oracle failures"
    )
    return {
        "length": chain.length,
        "boundary": chain.boundary.value,
        "block": m,
        "divergences": divergences,
        "oracle_failing_n": oracle_failures,
    }


class EntropyErratumCheck(BaseCheck):
    """
    Report where the printed formulas diverge from simulation.

    Always runs on the L=20, M=10 reference chains (open and closed) and on the
    configured chain when its blocks are equal. Fails only if the sawtooth
    oracle disagrees with simulation.
    """

    check_id = "entropy-erratum"
    default_severity = CheckSeverity.INFO
    check_tags = ["entropy", "erratum"]

    def _evaluate_impl(self) -> CheckResult:
        chains = [
            ChainConfig.equal_blocks(REFERENCE_LENGTH, Boundary.OPEN),
            ChainConfig.equal_blocks(REFERENCE_LENGTH, Boundary.CLOSED),
        ]
        covered = not (self.chain.is_closed and self.chain.block_size_a % 2)
        if self.chain.is_equal_blocks and covered and self.chain not in chains:
            chains.append(self.chain)
        reports = [_compare_chain(chain, self.config.theta_zero) for chain in chains]

        divergent = sum(len(report["divergences"]) for report in reports)
        failing = [report for report in reports if report["oracle_failing_n"]]
        evidence = {"theta_zero": self.config.theta_zero, "chains": reports}
        return self._compare(
            not failing,
            f"Sawtooth matches simulation on {len(reports)} chains; "
            f"printed formulas diverge at {divergent} points",
            f"Sawtooth disagrees with simulation on {len(failing)} chains",
            evidence,
        )
