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
"""Commutation and periodicity of V_1 .. V_{L+1}."""

from itertools import combinations
from typing import Optional

from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from interaction.operators import interaction_operators
from pauli.strings import commutes


class VnStructureCheck(BaseCheck):
    """V_1..V_L commute pairwise and V_{L+1} = V_1 (open chain, equal blocks)."""

    check_id = "vn-structure"
    default_severity = CheckSeverity.ERROR
    check_tags = ["operators"]

    def _check_preconditions(self) -> Optional[CheckResult]:
        if self.chain.is_closed or not self.chain.is_equal_blocks:
            return self._create_skip_result("Needs an open chain with equal blocks")
        return None

    def _evaluate_impl(self) -> CheckResult:
        length = self.chain.length
        operators = [op.generator for op in interaction_operators(length + 1, self.chain)]
        anticommuting = [
            [i + 1, j + 1]
            for i, j in combinations(range(length), 2)
            if not commutes(operators[i], operators[j])
        ]
        periodic = operators[length] == operators[0]
        evidence = {
            "anticommuting_pairs": anticommuting[:10],
            "v_first": str(operators[0]),
            "v_wrapped": str(operators[length]),
            "periodic": periodic,
        }
        if anticommuting:
            return self._create_fail_result(
                f"{len(anticommuting)} pairs V_i, V_j anticommute", evidence
            )
        return self._compare(
            periodic,
            f"V_1..V_{length} commute pairwise and V_{length + 1} = V_1",
            f"V_{length + 1} differs from V_1",
            evidence,
        )
