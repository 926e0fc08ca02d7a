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
"""Recursive V_n against the closed forms."""

import logging
from typing import Optional

from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from interaction.operators import interaction_operator_closed_form, interaction_operators
from utils.errors import NotCoveredError

logger = logging.getLogger(__name__)


class VnClosedFormCheck(BaseCheck):
    """Phase-exact agreement of recursion and closed form on every covered n."""

    check_id = "vn-closed-form"
    default_severity = CheckSeverity.ERROR
    check_tags = ["operators"]

    def _check_preconditions(self) -> Optional[CheckResult]:
        if self.chain.is_closed:
            return self._create_skip_result("Closed-chain V_n has no closed form")
        return None

    def _evaluate_impl(self) -> CheckResult:
        # Cover one full period plus the wrap-around V_{L+1}
        top = max(self.kicks, self.chain.length + 1)
        covered = 0
        mismatches = []
        for operator in interaction_operators(top, self.chain):
            try:
                expected = interaction_operator_closed_form(operator.n, self.chain)
            except NotCoveredError:
                continue
            covered += 1
            if expected.generators != operator.generators:
                logger.debug(f"V_{operator.n}: recursion {operator} vs closed form {expected}")
                mismatches.append(
                    {"n": operator.n, "recursion": str(operator), "closed_form": str(expected)}
                )

        evidence = {"n_max": top, "covered": covered, "mismatches": mismatches[:10]}
        if covered == 0:
            return self._create_skip_result("No n covered by a closed form", evidence)
        return self._compare(
            not mismatches,
            f"Recursion equals the closed form on all {covered} covered n",
            f"Recursion and closed form differ at {len(mismatches)} of {covered} covered n",
            evidence,
        )
