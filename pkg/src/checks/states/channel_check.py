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
"""Kraus reconstruction of the central pair after one kick."""

from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from dense.channel import pauli_channel_check
from interaction.chain import ChainConfig

TOLERANCE = 1e-12
CONTROL_THRESHOLD = 0.05
CONTROL_DROPPED = (4,)


class PauliChannelCheck(BaseCheck):
    """The four-term Pauli channel on a Bell pair yields rho_23 = I/4; three terms do not."""

    check_id = "pauli-channel"
    default_severity = CheckSeverity.ERROR
    check_tags = ["states", "dense"]

    def _evaluate_impl(self) -> CheckResult:
        chain = ChainConfig.equal_blocks(4)
        residual = pauli_channel_check(chain)
        control = pauli_channel_check(chain, dropped=CONTROL_DROPPED)
        evidence = {
            "residual": residual,
            "tolerance": TOLERANCE,
            "control_dropped": list(CONTROL_DROPPED),
            "control_residual": control,
            "control_threshold": CONTROL_THRESHOLD,
        }
        if residual >= TOLERANCE:
            return self._create_fail_result(
                f"Kraus reconstruction residual {residual:.2e} exceeds {TOLERANCE:.0e}", evidence
            )
        return self._compare(
            control > CONTROL_THRESHOLD,
            f"Kraus reconstruction exact ({residual:.2e}); control residual {control:.3f}",
            f"Negative control residual {control:.3f} does not exceed {CONTROL_THRESHOLD}",
            evidence,
        )
