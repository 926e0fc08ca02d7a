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
"""Gate-layer product against the Hamiltonian exponential."""

from typing import Optional

from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from interaction.factorization import verify_gate_layers

TOLERANCE = 1e-10


class GateLayersCheck(BaseCheck):
    """U from the Z and XX gate layers equals expm(-i pi/4 H_XX) expm(-i pi/4 H_Z)."""

    check_id = "gate-layers"
    default_severity = CheckSeverity.ERROR
    check_tags = ["algebra", "dense"]

    def _check_preconditions(self) -> Optional[CheckResult]:
        return self._require_matrices()

    def _evaluate_impl(self) -> CheckResult:
        residual = verify_gate_layers(self.chain)
        return self._compare(
            residual < TOLERANCE,
            f"Gate layers reproduce the Floquet operator (residual {residual:.2e})",
            f"Gate layers deviate from the Floquet operator by {residual:.2e}",
            {"residual": residual, "tolerance": TOLERANCE},
        )
