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
"""Dense check of U^n = U_A^n U_B^n V_n ... V_1."""

import logging
from typing import Optional

from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from interaction.factorization import verify_factorization

logger = logging.getLogger(__name__)

TOLERANCE = 1e-10


class FactorizationCheck(BaseCheck):
    """Interaction-picture factorization of U^n for n = 1..min(2L, n_max)."""

    check_id = "factorization"
    default_severity = CheckSeverity.ERROR
    check_tags = ["algebra", "dense"]

    def _check_preconditions(self) -> Optional[CheckResult]:
        skip = self._require_matrices()
        if skip:
            return skip
        if self.kicks < 1:
            return self._create_skip_result("No kicks to factorize (n_max = 0)")
        return None

    def _evaluate_impl(self) -> CheckResult:
        top = min(2 * self.chain.length, self.kicks)
        residuals = {}
        for n in range(1, top + 1):
            residuals[n] = verify_factorization(n, self.chain)
            logger.debug(f"factorization n={n}: {residuals[n]:.2e}")
        worst = max(residuals, key=residuals.get)
        failing = [n for n, r in residuals.items() if r >= TOLERANCE]
        evidence = {
            "n_range": [1, top],
            "max_residual": residuals[worst],
            "worst_n": worst,
            "failing_n": failing,
            "tolerance": TOLERANCE,
        }
        return self._compare(
            not failing,
            f"U^n factorizes for n = 1..{top} (max residual {residuals[worst]:.2e})",
            f"Factorization fails at n = {failing}",
            evidence,
        )
