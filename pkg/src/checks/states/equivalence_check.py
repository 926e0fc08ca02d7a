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
"""Interaction-picture reconstruction of the evolved state."""

import logging
from typing import Optional

from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from dense.equivalence import interaction_picture_equivalence

logger = logging.getLogger(__name__)

TOLERANCE = 1e-10


class InteractionEquivalenceCheck(BaseCheck):
    """evolve(n) = U_A^n U_B^n prod V_i |0>, and prod V_i |0> matches the Bell ladder."""

    check_id = "interaction-equivalence"
    default_severity = CheckSeverity.ERROR
    check_tags = ["states", "dense"]

    def _check_preconditions(self) -> Optional[CheckResult]:
        return self._require_dense()

    def _evaluate_impl(self) -> CheckResult:
        evolution_failures = []
        ladder_failures = []
        ladder_covered = []
        worst = 0.0
        for n in range(self.kicks + 1):
            result = interaction_picture_equivalence(n, self.chain)
            worst = max(worst, result.evolution_residual)
            if result.evolution_residual >= TOLERANCE:
                evolution_failures.append(n)
            if result.ladder_residual is not None:
                ladder_covered.append(n)
                if result.ladder_residual >= TOLERANCE:
                    ladder_failures.append(n)

        evidence = {
            "n_max": self.kicks,
            "max_evolution_residual": worst,
            "evolution_failing_n": evolution_failures,
            "ladder_covered_n": ladder_covered,
            "ladder_failing_n": ladder_failures,
            "tolerance": TOLERANCE,
        }
        if evolution_failures or ladder_failures:
            return self._create_fail_result(
                f"Reconstruction fails at n = {evolution_failures}, "
                f"Bell ladder fails at n = {ladder_failures}",
                evidence,
            )
        return self._create_pass_result(
            f"Interaction picture reproduces evolve(n) for n = 0..{self.kicks}; "
            f"Bell ladder matches at {len(ladder_covered)} n",
            evidence,
        )
